//! Shared fixtures for the benchmarks.

use fextremal::transform::construct_extremal;
use fextremal::Tree;

/// `(n, delta)` pairs used across the route benchmarks.
pub const ROUTE_GRID: &[(u64, u64)] = &[(12, 4), (16, 4), (19, 5)];

/// Orders used for the enumeration benchmarks.
pub const ENUM_ORDERS: &[usize] = &[10, 12, 14];

/// Deterministic broom: a path of `n - k` vertices with `k` extra leaves on
/// its last vertex.
pub fn broom(n: usize, k: usize) -> Tree {
    assert!(k < n);
    let spine = n - k;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    edges.extend((spine..n).map(|v| (spine - 1, v)));
    Tree::new(n, &edges).expect("broom is a tree")
}

/// A maximum-F tree, for transform and index benchmarks.
pub fn extremal_tree(n: u64, delta: u64) -> Tree {
    construct_extremal(n, delta).expect("valid order and bound")
}
