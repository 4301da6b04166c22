//! Successor generation of canonical level sequences of free trees.
//!
//! A rooted tree is written as the depths of its vertices in preorder with
//! children visited in non-increasing subtree order; a free tree is
//! represented by the unique such sequence rooted at its center, subject to
//! extra conditions on the first subtree (it is at most as tall as the rest,
//! and not larger when equally tall). Sequences are produced in decreasing
//! lexicographic order, each one derived from its predecessor.

/// Iterator over canonical level sequences of all free trees on `n` vertices.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    current: Option<Vec<usize>>,
    first: bool,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        let current = match n {
            0 => None,
            1 => Some(vec![0]),
            2 => Some(vec![0, 1]),
            _ => {
                // a path rooted at its center
                let mut seq: Vec<usize> = (0..=n / 2).collect();
                seq.extend(1..n.div_ceil(2));
                Some(seq)
            }
        };
        Self {
            current,
            first: true,
        }
    }

    /// Advances to the next sequence, reusing the internal buffer.
    pub fn next_sequence(&mut self) -> Option<&[usize]> {
        let seq = self.current.as_mut()?;
        if seq.len() <= 2 {
            if self.first {
                self.first = false;
                return self.current.as_deref();
            }
            self.current = None;
            return None;
        }
        if !self.first && !next_rooted(seq, None) {
            self.current = None;
            return None;
        }
        self.first = false;
        fix_free(seq);
        self.current.as_deref()
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.next_sequence().map(<[usize]>::to_vec)
    }
}

/// Next rooted level sequence in decreasing order, starting the search at
/// position `p` (default: the last entry greater than 1). `false` when
/// `seq` was the last one.
fn next_rooted(seq: &mut [usize], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = seq.len() - 1;
            while seq[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while seq[q] != seq[p] - 1 {
        q -= 1;
    }
    // copy the subtree pattern starting at q forward, period p - q
    for i in p..seq.len() {
        seq[i] = seq[i - p + q];
    }
    true
}

/// Split of a center-rooted sequence into the first principal subtree and
/// the remainder. Returns `(m, left_height, rest_height)` where the first
/// subtree occupies positions `1..m`.
fn split(seq: &[usize]) -> (usize, usize, usize) {
    let m = seq
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(seq.len(), |(i, _)| i);
    let left_height = seq[1..m].iter().max().map_or(0, |h| h - 1);
    let rest_height = seq[m..].iter().max().copied().unwrap_or(0);
    (m, left_height, rest_height)
}

/// Replaces a rooted sequence that violates the free-tree conditions by the
/// next one that satisfies them.
fn fix_free(seq: &mut [usize]) {
    let (m, left_h, rest_h) = split(seq);
    let left_len = m - 1;
    let rest_len = seq.len() - m + 1;
    let valid = rest_h > left_h
        || (rest_h == left_h
            && (left_len < rest_len || (left_len == rest_len && !left_greater(seq, m))));
    if valid {
        return;
    }
    let p = left_len;
    let at_p = seq[p];
    next_rooted(seq, Some(p));
    if at_p > 2 {
        let (m, _, _) = split(seq);
        let new_left_h = seq[1..m].iter().max().map_or(0, |h| h - 1);
        let len = seq.len();
        let tail = new_left_h + 1;
        for (k, slot) in seq[len - tail..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
}

/// Lexicographic comparison of the first subtree (depths shifted by one)
/// against the remainder (prefixed with the root depth 0).
fn left_greater(seq: &[usize], m: usize) -> bool {
    let left = seq[1..m].iter().map(|&l| l - 1);
    let rest = std::iter::once(0).chain(seq[m..].iter().copied());
    left.gt(rest)
}

/// Parent array of a level sequence (`parent[0] = 0`).
pub fn parents(seq: &[usize]) -> Vec<usize> {
    let mut parents = vec![0; seq.len()];
    let mut last_at_depth: Vec<usize> = Vec::with_capacity(seq.len());
    for (v, &depth) in seq.iter().enumerate() {
        last_at_depth.truncate(depth);
        if depth > 0 {
            parents[v] = last_at_depth[depth - 1];
        }
        last_at_depth.push(v);
    }
    parents
}

/// Vertex degrees of a level sequence, written into `out`.
pub fn degrees_into(seq: &[usize], out: &mut Vec<usize>) {
    out.clear();
    out.resize(seq.len(), 0);
    let mut stack: Vec<usize> = Vec::with_capacity(seq.len());
    for (v, &depth) in seq.iter().enumerate() {
        stack.truncate(depth);
        if let Some(&p) = stack.last() {
            out[p] += 1;
            out[v] += 1;
        }
        stack.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FREE_TREE_COUNTS: [u64; 21] = [
        0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
        317955, 823065,
    ];

    #[test]
    fn counts_match_known_sequence() {
        for (n, &expected) in FREE_TREE_COUNTS.iter().enumerate().take(19) {
            assert_eq!(FreeTrees::new(n).count() as u64, expected, "n={n}");
        }
    }

    #[test]
    fn first_is_path_and_last_is_star() {
        let all: Vec<_> = FreeTrees::new(6).collect();
        assert_eq!(all.first().unwrap(), &vec![0, 1, 2, 3, 1, 2]);
        assert_eq!(all.last().unwrap(), &vec![0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn degrees_and_parents() {
        let seq = [0, 1, 2, 2, 1];
        assert_eq!(parents(&seq), vec![0, 0, 1, 1, 0]);
        let mut d = Vec::new();
        degrees_into(&seq, &mut d);
        assert_eq!(d, vec![2, 3, 1, 1, 1]);
    }
}
