//! Closed-form description of the trees with maximum F-index among trees
//! with `n` vertices and maximum degree at most `delta`.
//!
//! Such a tree has only leaves and degree-`delta` vertices, plus at most one
//! vertex of residue degree `x` with `2 <= x <= delta - 1`. The counts follow
//! from `n_delta + n_1 (+1) = n` and `delta n_delta + n_1 (+x) = 2(n - 1)`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::DegreeSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("order n = {0} is too small (need n >= 2)")]
    OrderTooSmall(u64),
    #[error("degree bound {0} is too small (need delta >= 2)")]
    BoundTooSmall(u64),
    #[error("{0}")]
    OutOfRange(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Case {
    /// `(n - 2)` divisible by `(delta - 1)`: leaves and hubs only.
    Divisible,
    /// One extra vertex of degree `x`.
    Residue { x: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalSpec {
    pub n: u64,
    /// Effective bound, `min(delta, n - 1)`.
    pub delta: u64,
    #[serde(flatten)]
    pub case: Case,
    pub n_delta: u64,
    pub n_one: u64,
    pub f_value: u128,
    pub spec: DegreeSpec,
}

impl ExtremalSpec {
    pub fn residue(&self) -> Option<u64> {
        match self.case {
            Case::Divisible => None,
            Case::Residue { x } => Some(x),
        }
    }
}

fn effective_bound(n: u64, delta: u64) -> Result<u64, DomainError> {
    if n < 2 {
        return Err(DomainError::OrderTooSmall(n));
    }
    if delta < 2 {
        return Err(DomainError::BoundTooSmall(delta));
    }
    Ok(delta.min(n - 1))
}

/// The residue degree `x` in `[2, delta - 1]` with `(n - 1 - x) % (delta - 1) == 0`,
/// or `None` when `(n - 2) % (delta - 1) == 0`.
fn residue_degree(n: u64, delta: u64) -> Option<u64> {
    let m = delta - 1;
    let r = (n - 2) % m;
    // n - 1 - x = (n - 2) - (x - 1), so x - 1 = r
    (r != 0).then_some(r + 1)
}

/// The degree spec and F-value of every F-maximal tree on `n` vertices with
/// maximum degree at most `delta`. A bound of `n - 1` or more yields the star.
pub fn extremal_spec(n: u64, delta: u64) -> Result<ExtremalSpec, DomainError> {
    let delta = effective_bound(n, delta)?;
    if n == 2 {
        return Ok(ExtremalSpec {
            n,
            delta: 1,
            case: Case::Divisible,
            n_delta: 0,
            n_one: 2,
            f_value: 2,
            spec: DegreeSpec::from_counts([(1, 2)]),
        });
    }
    let m = delta - 1;
    let (case, n_delta, n_one) = match residue_degree(n, delta) {
        None => (Case::Divisible, (n - 2) / m, (n * (delta - 2) + 2) / m),
        Some(x) => (
            Case::Residue { x },
            (n - 1 - x) / m,
            ((n - 1) * (delta - 2) + x) / m,
        ),
    };
    let x = match case {
        Case::Divisible => None,
        Case::Residue { x } => Some(x),
    };
    let d = delta as u128;
    let f_value = d.pow(3) * n_delta as u128 + n_one as u128 + x.map_or(0, |x| (x as u128).pow(3));
    let spec = DegreeSpec::from_counts(
        [
            (delta, n_delta),
            (x.unwrap_or(0), x.map_or(0, |_| 1)),
            (1, n_one),
        ]
        .map(|(d, c)| (d as usize, c as usize)),
    );
    Ok(ExtremalSpec {
        n,
        delta,
        case,
        n_delta,
        n_one,
        f_value,
        spec,
    })
}

/// Maximum F-index over trees with `n` vertices and maximum degree at most
/// `delta`, from the two closed forms:
/// `delta(delta+1)(n-2) + 2(n-1)` in the divisible case, else
/// `(delta^2+delta+2)(n-1) - (delta^2+delta+1) x + x^3`.
pub fn f_max_formula(n: u64, delta: u64) -> Result<u128, DomainError> {
    let delta = effective_bound(n, delta)?;
    if n == 2 {
        return Ok(2);
    }
    let (n, d) = (n as i128, delta as i128);
    let value = match residue_degree(n as u64, delta) {
        None => d * (d + 1) * (n - 2) + 2 * (n - 1),
        Some(x) => {
            let x = x as i128;
            (d * d + d + 2) * (n - 1) - (d * d + d + 1) * x + x.pow(3)
        }
    };
    Ok(value as u128)
}

/// Molecular trees (maximum degree at most 4). Orders up to 5 give the star.
pub fn molecular_extremal_spec(n: u64) -> Result<ExtremalSpec, DomainError> {
    extremal_spec(n, 4)
}
