//! Integer program over degree-class counts `n_i` and edge-type counts
//! `m_ij` whose optimum is the degree vector of an F-maximal tree:
//!
//! ```text
//! maximize   sum_i i^3 n_i
//! subject to sum_i n_i             = n                     (C1)
//!            sum_i i n_i           = 2(n - 1)              (C2)
//!            sum_{i=2}^{delta-1} n_i <= 1                  (C3)
//!            sum_{j!=i} m_ij + 2 m_ii = i n_i  for each i  (C4)
//!            0 <= n_i <= n - 1,  0 <= m_ij <= n - 1
//! ```
//!
//! [`solve`] exploits C3 directly; [`branch_bound`] is a generic exact
//! solver used to cross-check it.

pub mod branch_bound;
mod solve;

pub use solve::solve;

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::extremal::DomainError;
use crate::graph::{DegreeSpec, EdgeTypeMatrix, Tree};
use crate::transform::realize_degree_sequence;
use branch_bound::{IntegerProgram, Sense};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IlpError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("integer program is infeasible")]
    Infeasible,
    #[error("degree vector {0} is not the degree sequence of a tree")]
    NotRealizable(DegreeSpec),
}

/// Decision variable of the program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Number of vertices of degree `i`.
    N(usize),
    /// Number of edges joining degrees `i <= j`.
    M(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub terms: Vec<(Var, i64)>,
    pub sense: Sense,
    pub rhs: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IlpInstance {
    n: u64,
    delta: u64,
}

/// Builds the program for trees on `n` vertices with maximum degree at most
/// `delta`, where `2 <= delta <= n - 1`.
pub fn build_instance(n: u64, delta: u64) -> Result<IlpInstance, IlpError> {
    if n < 3 {
        return Err(DomainError::OrderTooSmall(n).into());
    }
    if delta < 2 {
        return Err(DomainError::BoundTooSmall(delta).into());
    }
    if delta > n - 1 {
        return Err(DomainError::OutOfRange(format!(
            "degree bound {delta} exceeds n - 1 = {}",
            n - 1
        ))
        .into());
    }
    Ok(IlpInstance { n, delta })
}

impl IlpInstance {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    fn d(&self) -> usize {
        self.delta as usize
    }

    /// Upper bound shared by every variable.
    pub fn upper_bound(&self) -> u64 {
        self.n - 1
    }

    /// `n_1..n_delta` followed by `m_ij` for `i <= j` in lexicographic order.
    pub fn variables(&self) -> Vec<Var> {
        let d = self.d();
        let mut vars: Vec<Var> = (1..=d).map(Var::N).collect();
        for i in 1..=d {
            vars.extend((i..=d).map(|j| Var::M(i, j)));
        }
        vars
    }

    pub fn objective(&self) -> Vec<(Var, i64)> {
        (1..=self.d())
            .map(|i| (Var::N(i), (i as i64).pow(3)))
            .collect()
    }

    /// Rows C1, C2, C3 (omitted when `delta == 2`, where it is empty) and
    /// one C4 row per degree class.
    pub fn constraints(&self) -> Vec<Constraint> {
        let d = self.d();
        let n = self.n as i64;
        let mut rows = vec![
            Constraint {
                terms: (1..=d).map(|i| (Var::N(i), 1)).collect(),
                sense: Sense::Eq,
                rhs: n,
            },
            Constraint {
                terms: (1..=d).map(|i| (Var::N(i), i as i64)).collect(),
                sense: Sense::Eq,
                rhs: 2 * (n - 1),
            },
        ];
        if d > 2 {
            rows.push(Constraint {
                terms: (2..d).map(|i| (Var::N(i), 1)).collect(),
                sense: Sense::Le,
                rhs: 1,
            });
        }
        for i in 1..=d {
            let mut terms = vec![(Var::N(i), -(i as i64))];
            for j in 1..=d {
                let coef = if i == j { 2 } else { 1 };
                terms.push((Var::M(i.min(j), i.max(j)), coef));
            }
            rows.push(Constraint {
                terms,
                sense: Sense::Eq,
                rhs: 0,
            });
        }
        rows
    }

    /// Lowers the instance to the generic solver's matrix form.
    pub fn to_program(&self) -> (IntegerProgram, Vec<Var>) {
        let vars = self.variables();
        let index: BTreeMap<Var, usize> = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let ub = self.upper_bound() as i64;
        let mut program = IntegerProgram::new(vec![(0, ub); vars.len()]);
        for row in self.constraints() {
            program.add_row(
                row.terms.iter().map(|(v, c)| (index[v], *c)).collect(),
                row.sense,
                row.rhs,
            );
        }
        program.set_objective(
            self.objective()
                .iter()
                .map(|(v, c)| (index[v], *c))
                .collect(),
        );
        (program, vars)
    }
}

/// Integer point of an [`IlpInstance`]. Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpSolution {
    pub n: u64,
    pub delta: u64,
    pub ni: BTreeMap<usize, u64>,
    pub mij: BTreeMap<(usize, usize), u64>,
    pub objective: u128,
}

impl IlpSolution {
    pub fn degree_spec(&self) -> DegreeSpec {
        DegreeSpec::from_counts(self.ni.iter().map(|(&d, &c)| (d, c as usize)))
    }

    pub fn edge_types(&self) -> EdgeTypeMatrix {
        EdgeTypeMatrix::from_counts(self.mij.clone())
    }

    /// Nonzero variables as `n_i=c` / `m_i,j=c` pairs, `n` before `m`.
    pub fn nonzero_vars(&self) -> Vec<(String, u64)> {
        let ns = self
            .ni
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (format!("n_{i}"), c));
        let ms = self
            .mij
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|((i, j), &c)| (format!("m_{i},{j}"), c));
        ns.chain(ms).collect()
    }
}

/// True iff `sol` is an integer point of `inst` satisfying every row and
/// bound exactly, with an objective equal to `sum i^3 n_i`.
pub fn verify_solution(inst: &IlpInstance, sol: &IlpSolution) -> bool {
    let d = inst.d();
    let ub = inst.upper_bound();
    if sol.n != inst.n || sol.delta != inst.delta {
        return false;
    }
    if sol.ni.keys().any(|&i| i == 0 || i > d)
        || sol.mij.keys().any(|&(i, j)| i == 0 || i > j || j > d)
        || sol.ni.values().chain(sol.mij.values()).any(|&c| c > ub)
    {
        return false;
    }
    let n = |i: usize| sol.ni.get(&i).copied().unwrap_or(0) as u128;
    let vertices: u128 = (1..=d).map(n).sum();
    let degree_total: u128 = (1..=d).map(|i| i as u128 * n(i)).sum();
    let middle: u128 = (2..d).map(n).sum();
    if vertices != inst.n as u128 || degree_total != 2 * (inst.n as u128 - 1) || middle > 1 {
        return false;
    }
    let mut endpoints = vec![0u128; d + 1];
    for (&(i, j), &c) in &sol.mij {
        endpoints[i] += c as u128;
        endpoints[j] += c as u128;
    }
    if (1..=d).any(|i| endpoints[i] != i as u128 * n(i)) {
        return false;
    }
    let objective: u128 = (1..=d).map(|i| (i as u128).pow(3) * n(i)).sum();
    objective == sol.objective
}

/// Builds a concrete tree with the solution's degree multiset.
///
/// The program has no connectivity row, so `m_ij` alone does not determine a
/// tree; the result's own [`Tree::edge_type_counts`] may differ from
/// `sol.mij`.
pub fn realize_solution(sol: &IlpSolution) -> Result<Tree, IlpError> {
    let spec = sol.degree_spec();
    realize_degree_sequence(&spec.to_sequence()).ok_or(IlpError::NotRealizable(spec))
}

#[derive(Serialize, Deserialize)]
struct SolutionJson {
    n: u64,
    delta: u64,
    ni: BTreeMap<String, u64>,
    mij: BTreeMap<String, u64>,
    objective: u128,
}

impl Serialize for IlpSolution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SolutionJson {
            n: self.n,
            delta: self.delta,
            ni: self.ni.iter().map(|(i, &c)| (i.to_string(), c)).collect(),
            mij: self
                .mij
                .iter()
                .map(|((i, j), &c)| (format!("{i},{j}"), c))
                .collect(),
            objective: self.objective,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IlpSolution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SolutionJson::deserialize(d)?;
        let ni = raw
            .ni
            .into_iter()
            .map(|(k, c)| Ok((k.parse().map_err(D::Error::custom)?, c)))
            .collect::<Result<_, D::Error>>()?;
        let mij = raw
            .mij
            .into_iter()
            .map(|(k, c)| {
                let (i, j) = k
                    .split_once(',')
                    .ok_or_else(|| D::Error::custom(format!("bad m_ij key `{k}`")))?;
                let i = i.trim().parse().map_err(D::Error::custom)?;
                let j = j.trim().parse().map_err(D::Error::custom)?;
                Ok(((i, j), c))
            })
            .collect::<Result<_, D::Error>>()?;
        Ok(Self {
            n: raw.n,
            delta: raw.delta,
            ni,
            mij,
            objective: raw.objective,
        })
    }
}
