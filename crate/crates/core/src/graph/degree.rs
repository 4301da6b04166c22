use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Degrees of a tree in non-increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// True iff the sequence is the degree sequence of some tree: every entry is
/// positive and the entries sum to `2(n - 1)`. The empty sequence stands for
/// the single-vertex tree.
pub fn is_tree_degree_sequence(degrees: &[usize]) -> bool {
    if degrees.is_empty() {
        return true;
    }
    let n = degrees.len();
    n >= 2
        && degrees.iter().all(|&d| d >= 1)
        && degrees
            .iter()
            .try_fold(0usize, |acc, &d| acc.checked_add(d))
            == Some(2 * (n - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecParseError {
    #[error("malformed degree spec term `{0}` (expected `degree^count`)")]
    BadTerm(String),
    #[error("degree spec terms must have strictly decreasing degrees")]
    NotDecreasing,
    #[error("degree spec degrees and counts must be positive")]
    NonPositive,
    #[error("spec expands to {found} vertices, expected {expected}")]
    InconsistentTotal { expected: usize, found: usize },
}

/// Run-length form `[x_1^{n_1}, ..., x_t^{n_t}]` of a degree sequence with
/// strictly decreasing degrees `x_i` and positive counts `n_i`.
///
/// Text form is `4^3,3^1,1^9`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSpec(Vec<(usize, usize)>);

impl DegreeSpec {
    pub fn new(entries: Vec<(usize, usize)>) -> Result<Self, SpecParseError> {
        if entries.iter().any(|&(d, c)| d == 0 || c == 0) {
            return Err(SpecParseError::NonPositive);
        }
        if entries.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(SpecParseError::NotDecreasing);
        }
        Ok(Self(entries))
    }

    /// Builds a spec from `(degree, count)` pairs in any order, dropping
    /// zero counts and merging repeated degrees.
    pub fn from_counts(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut map = std::collections::BTreeMap::new();
        for (d, c) in pairs {
            if c > 0 {
                *map.entry(d).or_insert(0) += c;
            }
        }
        Self(map.into_iter().rev().collect())
    }

    pub fn from_sequence(seq: &DegreeSequence) -> Self {
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for &d in seq.as_slice() {
            match entries.last_mut() {
                Some((x, c)) if *x == d => *c += 1,
                _ => entries.push((d, 1)),
            }
        }
        Self(entries)
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(|&(_, c)| c).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.0.first().map_or(0, |&(d, _)| d)
    }

    pub fn count_of(&self, degree: usize) -> usize {
        self.0
            .iter()
            .find(|&&(d, _)| d == degree)
            .map_or(0, |&(_, c)| c)
    }

    /// Expands to the full sequence, checking it has exactly `n` entries.
    pub fn expand(&self, n: usize) -> Result<DegreeSequence, SpecParseError> {
        let found = self.order();
        if found != n {
            return Err(SpecParseError::InconsistentTotal { expected: n, found });
        }
        Ok(self.to_sequence())
    }

    pub fn to_sequence(&self) -> DegreeSequence {
        DegreeSequence(
            self.0
                .iter()
                .flat_map(|&(d, c)| std::iter::repeat_n(d, c))
                .collect(),
        )
    }

    /// Sum of `d^3` over the expanded sequence, without expanding.
    pub fn cube_sum(&self) -> u128 {
        self.0
            .iter()
            .map(|&(d, c)| (d as u128).pow(3) * c as u128)
            .sum()
    }

    pub fn degree_sum(&self) -> u128 {
        self.0.iter().map(|&(d, c)| d as u128 * c as u128).sum()
    }

    /// The spec-level analogue of [`is_tree_degree_sequence`].
    pub fn is_tree_realizable(&self) -> bool {
        let n = self.order() as u128;
        match n {
            0 => true,
            1 => false,
            _ => self.degree_sum() == 2 * (n - 1),
        }
    }
}

impl fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}^{c}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Self::default());
        }
        let entries = s
            .split(',')
            .map(|term| {
                let term = term.trim();
                let (d, c) = term
                    .split_once('^')
                    .ok_or_else(|| SpecParseError::BadTerm(term.to_string()))?;
                let parse = |x: &str| {
                    x.trim()
                        .trim_matches(|c| c == '{' || c == '}')
                        .parse::<usize>()
                        .map_err(|_| SpecParseError::BadTerm(term.to_string()))
                };
                Ok((parse(d)?, parse(c)?))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }
}

impl Serialize for DegreeSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DegreeSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
