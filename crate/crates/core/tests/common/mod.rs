#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use fextremal::{canonical_code, DegreeSpec, Tree};
use rand::Rng;

/// Tree encoded by a Prüfer sequence of length `n - 2`.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Uniform labeled tree on `n >= 1` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Tree {
    match n {
        1 => Tree::new(1, &[]).unwrap(),
        2 => Tree::path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}

/// Random recursive tree whose maximum degree stays at most `delta >= 2`,
/// then randomly relabeled.
pub fn random_bounded_tree(rng: &mut impl Rng, n: usize, delta: usize) -> Tree {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < delta).collect();
        let u = open[rng.gen_range(0..open.len())];
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Tree::new(n, &edges).unwrap().relabel(&perm)
}

/// Number of isomorphism classes among all `n^(n-2)` labeled trees,
/// deduplicated by canonical code.
pub fn prufer_class_count(n: usize) -> usize {
    if n <= 2 {
        return n.min(1);
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut seen = HashSet::new();
    loop {
        seen.insert(canonical_code(&prufer_decode(&seq)));
        // odometer increment
        let mut k = 0;
        loop {
            if k == len {
                return seen.len();
            }
            seq[k] += 1;
            if seq[k] < n {
                break;
            }
            seq[k] = 0;
            k += 1;
        }
    }
}

/// Representatives of every free tree on `1..=n_max` vertices, built by
/// attaching a leaf to each vertex of each smaller class and deduplicating
/// by canonical code. Index `k` holds order `k`.
pub fn leaf_growth_classes(n_max: usize) -> Vec<Vec<Tree>> {
    let mut levels: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::new(1, &[]).unwrap()]];
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &levels[n - 1] {
            for v in 0..t.order() {
                let mut edges = t.edges().to_vec();
                edges.push((v, n - 1));
                let grown = Tree::new(n, &edges).unwrap();
                if seen.insert(canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Class counts per degree spec for one order.
pub fn spec_histogram(trees: &[Tree]) -> BTreeMap<DegreeSpec, u64> {
    let mut h = BTreeMap::new();
    for t in trees {
        *h.entry(t.degree_spec()).or_insert(0) += 1;
    }
    h
}
