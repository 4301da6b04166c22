use std::collections::BTreeMap;

use super::Tree;

/// Counts `m_ij` (`i <= j`) of edges joining a degree-`i` vertex to a
/// degree-`j` vertex. Only nonzero entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeTypeMatrix {
    counts: BTreeMap<(usize, usize), u64>,
}

impl EdgeTypeMatrix {
    pub fn of_tree(t: &Tree) -> Self {
        let mut counts = BTreeMap::new();
        for &(u, v) in t.edges() {
            let (a, b) = (t.degree(u), t.degree(v));
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn from_counts(counts: BTreeMap<(usize, usize), u64>) -> Self {
        let counts = counts
            .into_iter()
            .filter(|&(_, c)| c > 0)
            .map(|((i, j), c)| ((i.min(j), i.max(j)), c))
            .collect();
        Self { counts }
    }

    /// `m_ij`, symmetric in its arguments.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Endpoint count of degree class `i`: `sum_{j != i} m_ij + 2 m_ii`.
    pub fn endpoints(&self, i: usize) -> u64 {
        self.counts
            .iter()
            .map(|(&(a, b), &c)| match (a == i, b == i) {
                (true, true) => 2 * c,
                (true, false) | (false, true) => c,
                _ => 0,
            })
            .sum()
    }
}
