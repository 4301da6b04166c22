//! Exhaustive isomorphism-free enumeration of free trees, with searches for
//! F-extremal trees and realization counts per degree spec.

mod level;

pub use level::{degrees_into, parents, FreeTrees};

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{DegreeSpec, Tree};
use crate::invariants::cube_sum;
use crate::io::TreeJson;

/// Default largest order accepted by the enumerator.
pub const DEFAULT_CEILING: usize = 24;
/// Default number of representative trees kept per winning spec.
pub const DEFAULT_REPRESENTATIVES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} outside the enumeration range 1..={ceiling}")]
    OutOfRange { n: usize, ceiling: usize },
    #[error("degree spec {0} is not realizable by a tree")]
    NotRealizable(DegreeSpec),
    #[error("degree bound must be at least 1")]
    BadBound,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub max_degree: Option<usize>,
    pub degree_spec: Option<DegreeSpec>,
}

impl EnumFilter {
    pub fn max_degree(delta: usize) -> Self {
        Self {
            max_degree: Some(delta),
            degree_spec: None,
        }
    }

    pub fn spec(spec: DegreeSpec) -> Self {
        Self {
            max_degree: Some(spec.max_degree()),
            degree_spec: Some(spec),
        }
    }

    /// `degrees` must be in level-sequence vertex order.
    fn accepts(
        &self,
        degrees: &[usize],
        expanded: Option<&[usize]>,
        scratch: &mut Vec<usize>,
    ) -> bool {
        if let Some(d) = self.max_degree {
            if degrees.iter().any(|&x| x > d) {
                return false;
            }
        }
        match expanded {
            None => true,
            Some(target) => {
                scratch.clear();
                scratch.extend_from_slice(degrees);
                scratch.sort_unstable_by(|a, b| b.cmp(a));
                scratch == target
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub ceiling: usize,
    pub representatives: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
            representatives: DEFAULT_REPRESENTATIVES,
        }
    }
}

fn check_order(n: usize, cfg: &EnumConfig) -> Result<(), EnumError> {
    if n == 0 || n > cfg.ceiling {
        return Err(EnumError::OutOfRange {
            n,
            ceiling: cfg.ceiling,
        });
    }
    Ok(())
}

fn check_filter(n: usize, filter: &EnumFilter) -> Result<Option<Vec<usize>>, EnumError> {
    if filter.max_degree == Some(0) && n > 1 {
        return Err(EnumError::BadBound);
    }
    match &filter.degree_spec {
        None => Ok(None),
        Some(spec) => {
            if !spec.is_tree_realizable() {
                return Err(EnumError::NotRealizable(spec.clone()));
            }
            Ok(Some(spec.to_sequence().into_vec()))
        }
    }
}

/// Visits the canonical level sequence and vertex degrees of every free tree
/// on `n` vertices that passes `filter`, in the generator's fixed order.
pub fn for_each_tree(
    n: usize,
    filter: &EnumFilter,
    cfg: &EnumConfig,
    mut visit: impl FnMut(&[usize], &[usize]),
) -> Result<(), EnumError> {
    check_order(n, cfg)?;
    let expanded = check_filter(n, filter)?;
    if expanded.as_ref().is_some_and(|e| e.len() != n) {
        return Ok(());
    }
    let mut trees = FreeTrees::new(n);
    let mut degrees = Vec::with_capacity(n);
    let mut scratch = Vec::with_capacity(n);
    while let Some(seq) = trees.next_sequence() {
        if n == 1 {
            degrees.clear();
            degrees.push(0);
        } else {
            degrees_into(seq, &mut degrees);
        }
        if filter.accepts(&degrees, expanded.as_deref(), &mut scratch) {
            visit(seq, &degrees);
        }
    }
    Ok(())
}

/// Streams one tree per isomorphism class on `n` vertices passing `filter`.
pub fn generate_free_trees(
    n: usize,
    filter: &EnumFilter,
    cfg: &EnumConfig,
) -> Result<impl Iterator<Item = Tree>, EnumError> {
    check_order(n, cfg)?;
    let expanded = check_filter(n, filter)?;
    let wrong_length = expanded.as_ref().is_some_and(|e| e.len() != n);
    let filter = filter.clone();
    let mut degrees = Vec::with_capacity(n);
    let mut scratch = Vec::with_capacity(n);
    let trees = FreeTrees::new(if wrong_length { 0 } else { n });
    Ok(trees.filter_map(move |seq| {
        if n > 1 {
            degrees_into(&seq, &mut degrees);
            if !filter.accepts(&degrees, expanded.as_deref(), &mut scratch) {
                return None;
            }
        }
        Some(Tree::from_parents(&parents(&seq)))
    }))
}

/// Number of isomorphism classes of trees with exactly the degree multiset `spec`.
pub fn count_with_spec(n: usize, spec: &DegreeSpec, cfg: &EnumConfig) -> Result<u64, EnumError> {
    if !spec.is_tree_realizable() {
        return Err(EnumError::NotRealizable(spec.clone()));
    }
    let mut count = 0;
    for_each_tree(n, &EnumFilter::spec(spec.clone()), cfg, |_, _| count += 1)?;
    Ok(count)
}

/// Trees sharing one degree spec among the extremal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecGroup {
    pub spec: DegreeSpec,
    pub count: u64,
    pub representatives: Vec<Tree>,
}

/// Outcome of an exhaustive extremal search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFReport {
    pub n: usize,
    /// Degree bound of the search, `None` when unbounded.
    pub delta: Option<usize>,
    /// The extremal value (the minimum for [`min_f_search`]).
    pub f_max: u128,
    /// Winning specs in decreasing spec order.
    pub groups: Vec<SpecGroup>,
}

impl MaxFReport {
    pub fn specs(&self) -> impl Iterator<Item = &DegreeSpec> {
        self.groups.iter().map(|g| &g.spec)
    }

    /// The single winning group, if the optimum has a unique degree spec.
    pub fn unique(&self) -> Option<&SpecGroup> {
        match self.groups.as_slice() {
            [g] => Some(g),
            _ => None,
        }
    }
}

impl Serialize for MaxFReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MaxFReport", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("delta", &self.delta)?;
        st.serialize_field("f_max", &self.f_max)?;
        st.serialize_field("specs", &self.specs().collect::<Vec<_>>())?;
        st.serialize_field(
            "counts",
            &self.groups.iter().map(|g| g.count).collect::<Vec<_>>(),
        )?;
        let reps: Vec<Vec<TreeJson>> = self
            .groups
            .iter()
            .map(|g| g.representatives.iter().map(TreeJson::from).collect())
            .collect();
        st.serialize_field("representatives", &reps)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    Maximize,
    Minimize,
}

/// Exhaustive search for the trees optimizing `score`, a function of the
/// vertex degrees. Ties are grouped by degree spec.
pub fn extreme_search(
    n: usize,
    filter: &EnumFilter,
    cfg: &EnumConfig,
    goal: Goal,
    mut score: impl FnMut(&[usize]) -> u128,
) -> Result<MaxFReport, EnumError> {
    let mut best: Option<u128> = None;
    let mut groups: BTreeMap<DegreeSpec, (u64, Vec<Tree>)> = BTreeMap::new();
    for_each_tree(n, filter, cfg, |seq, degrees| {
        let value = score(degrees);
        let better = match (best, goal) {
            (None, _) => true,
            (Some(b), Goal::Maximize) => value > b,
            (Some(b), Goal::Minimize) => value < b,
        };
        if better {
            best = Some(value);
            groups.clear();
        } else if best != Some(value) {
            return;
        }
        let spec = if n == 1 {
            DegreeSpec::default()
        } else {
            DegreeSpec::from_counts(degrees.iter().map(|&d| (d, 1)))
        };
        let (count, reps) = groups.entry(spec).or_default();
        *count += 1;
        if reps.len() < cfg.representatives {
            reps.push(Tree::from_parents(&parents(seq)));
        }
    })?;
    Ok(MaxFReport {
        n,
        delta: filter.max_degree,
        f_max: best.unwrap_or(0),
        groups: groups
            .into_iter()
            .rev()
            .map(|(spec, (count, representatives))| SpecGroup {
                spec,
                count,
                representatives,
            })
            .collect(),
    })
}

/// Maximum F over all trees on `n` vertices with maximum degree at most `delta`.
pub fn max_f_search(n: usize, delta: usize, cfg: &EnumConfig) -> Result<MaxFReport, EnumError> {
    if delta == 0 {
        return Err(EnumError::BadBound);
    }
    extreme_search(
        n,
        &EnumFilter::max_degree(delta),
        cfg,
        Goal::Maximize,
        cube_sum,
    )
}

/// Minimum F over all trees on `n` vertices.
pub fn min_f_search(n: usize, cfg: &EnumConfig) -> Result<MaxFReport, EnumError> {
    extreme_search(n, &EnumFilter::default(), cfg, Goal::Minimize, cube_sum)
}
