//! Degree-based topological indices.
//!
//! Integer exponents are evaluated exactly with arbitrary-precision integers;
//! fractional or negative exponents fall back to `f64`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Tree;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("exponent {0} is excluded (alpha must differ from 0 and 1)")]
    InvalidAlpha(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Exact(BigUint),
    Approx(f64),
}

impl IndexValue {
    pub fn exact(v: impl Into<BigUint>) -> Self {
        Self::Exact(v.into())
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            Self::Exact(v) => Some(v),
            Self::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Exact(v) => v.to_f64().unwrap_or(f64::INFINITY),
            Self::Approx(x) => *x,
        }
    }
}

impl From<u128> for IndexValue {
    fn from(v: u128) -> Self {
        Self::Exact(v.into())
    }
}

/// Exact values print as integers, approximate ones with 12 decimals.
impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::Approx(x) => write!(f, "{x:.12}"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Exact(v) => match v.to_u64() {
                Some(small) => s.serialize_u64(small),
                None => s.collect_str(v),
            },
            Self::Approx(x) => s.serialize_f64(*x),
        }
    }
}

/// Integer exponent if `alpha` is a non-negative whole number.
fn integral(alpha: f64) -> Option<u32> {
    (alpha >= 0.0 && alpha.fract() == 0.0 && alpha <= u32::MAX as f64).then_some(alpha as u32)
}

fn check_alpha(alpha: f64) -> Result<(), IndexError> {
    if alpha == 0.0 || alpha == 1.0 || alpha.is_nan() {
        Err(IndexError::InvalidAlpha(alpha))
    } else {
        Ok(())
    }
}

/// `sum_v d(v)^3`.
pub fn f_index(t: &Tree) -> IndexValue {
    f_index_u128(t).into()
}

/// [`f_index`] as a machine integer. Cannot overflow for any tree that fits
/// in memory: the sum is at most `(2n)^3`.
pub fn f_index_u128(t: &Tree) -> u128 {
    cube_sum(&t.vertex_degrees())
}

pub fn cube_sum(degrees: &[usize]) -> u128 {
    degrees.iter().map(|&d| (d as u128).pow(3)).sum()
}

/// `M1 = sum_v d(v)^2`.
pub fn first_zagreb(t: &Tree) -> IndexValue {
    let s: u128 = t.vertex_degrees().iter().map(|&d| (d as u128).pow(2)).sum();
    s.into()
}

/// `M2 = sum_{uv in E} d(u) d(v)`.
pub fn second_zagreb(t: &Tree) -> IndexValue {
    let s: u128 = t
        .edges()
        .iter()
        .map(|&(u, v)| t.degree(u) as u128 * t.degree(v) as u128)
        .sum();
    s.into()
}

/// `M1^alpha = sum_v d(v)^alpha`, the same quantity as the zeroth-order
/// general Randić index.
pub fn general_first_zagreb(t: &Tree, alpha: f64) -> Result<IndexValue, IndexError> {
    check_alpha(alpha)?;
    if t.order() == 1 {
        return Ok(IndexValue::Exact(BigUint::zero()));
    }
    Ok(degree_power_sum(&t.vertex_degrees(), alpha))
}

pub fn zeroth_order_general_randic(t: &Tree, alpha: f64) -> Result<IndexValue, IndexError> {
    general_first_zagreb(t, alpha)
}

/// `sum d^alpha` over an arbitrary degree list, exact for integer `alpha`.
pub fn degree_power_sum(degrees: &[usize], alpha: f64) -> IndexValue {
    match integral(alpha) {
        Some(k) => IndexValue::Exact(degrees.iter().map(|&d| BigUint::from(d).pow(k)).sum()),
        None => IndexValue::Approx(degrees.iter().map(|&d| (d as f64).powf(alpha)).sum()),
    }
}

/// Edge-sum form of [`general_first_zagreb`]:
/// `sum_{uv in E} (d(u)^(alpha-1) + d(v)^(alpha-1))`.
pub fn general_first_zagreb_edge_form(t: &Tree, alpha: f64) -> Result<IndexValue, IndexError> {
    check_alpha(alpha)?;
    let exponent = alpha - 1.0;
    // alpha >= 2 integral gives exponent >= 1; alpha in (1, 2) is fractional
    match integral(alpha).and_then(|_| integral(exponent)) {
        Some(k) => {
            let pow = |d: usize| BigUint::from(d).pow(k);
            let s = t
                .edges()
                .iter()
                .map(|&(u, v)| pow(t.degree(u)) + pow(t.degree(v)))
                .sum();
            Ok(IndexValue::Exact(s))
        }
        None => {
            let pow = |d: usize| (d as f64).powf(exponent);
            let s = t
                .edges()
                .iter()
                .map(|&(u, v)| pow(t.degree(u)) + pow(t.degree(v)))
                .sum();
            Ok(IndexValue::Approx(s))
        }
    }
}

/// `R = sum_{uv in E} 1 / sqrt(d(u) d(v))`.
pub fn randic_index(t: &Tree) -> IndexValue {
    IndexValue::Approx(
        t.edges()
            .iter()
            .map(|&(u, v)| 1.0 / ((t.degree(u) * t.degree(v)) as f64).sqrt())
            .sum(),
    )
}
