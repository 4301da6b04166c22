//! F-increasing edge shifts, the extremalization loop built on them, and
//! direct greedy construction of extremal trees.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::extremal::{extremal_spec, DomainError};
use crate::graph::{is_tree_degree_sequence, DegreeSequence, Tree, Vertex};
use crate::invariants::f_index_u128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("vertex {vertex} has degree {degree} above the bound {delta}")]
    DegreeBoundViolated {
        vertex: Vertex,
        degree: usize,
        delta: usize,
    },
    #[error("edge {0}-{1} is not in the tree")]
    EdgeMissing(Vertex, Vertex),
    #[error("edge {0}-{1} is already in the tree")]
    EdgePresent(Vertex, Vertex),
    #[error("moving {w} from {v} to {u} would disconnect the tree")]
    WouldDisconnect { u: Vertex, v: Vertex, w: Vertex },
    #[error("edge shift needs distinct vertices, got u={u} v={v} w={w}")]
    RepeatedVertex { u: Vertex, v: Vertex, w: Vertex },
}

/// Vertices with degree strictly between 1 and `delta`, by non-increasing
/// degree and then increasing id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleSet(Vec<Vertex>);

impl MiddleSet {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_bound(t: &Tree, delta: usize) -> Result<(), TransformError> {
    match (0..t.order()).find(|&v| t.degree(v) > delta) {
        Some(v) => Err(TransformError::DegreeBoundViolated {
            vertex: v,
            degree: t.degree(v),
            delta,
        }),
        None => Ok(()),
    }
}

pub fn middle_degree_vertices(t: &Tree, delta: usize) -> Result<MiddleSet, TransformError> {
    check_bound(t, delta)?;
    let mut middle: Vec<Vertex> = (0..t.order())
        .filter(|&v| (2..delta).contains(&t.degree(v)))
        .collect();
    middle.sort_by_key(|&v| (std::cmp::Reverse(t.degree(v)), v));
    Ok(MiddleSet(middle))
}

/// Change in F when `u` gains an edge and `v` loses one:
/// `(du+1)^3 - du^3 + (dv-1)^3 - dv^3`.
fn shift_gain(du: usize, dv: usize) -> i128 {
    let (du, dv) = (du as i128, dv as i128);
    (du + 1).pow(3) - du.pow(3) + (dv - 1).pow(3) - dv.pow(3)
}

/// [`shift_gain`] restricted to `du >= dv >= 2`, where it is strictly positive.
pub fn f_delta(du: usize, dv: usize) -> Result<u128, DomainError> {
    if dv < 2 || du < dv {
        return Err(DomainError::OutOfRange(format!(
            "f_delta needs d_u >= d_v >= 2, got d_u={du} d_v={dv}"
        )));
    }
    Ok(shift_gain(du, dv) as u128)
}

/// Deletes edge `vw` and adds edge `uw`, moving the branch at `w` from `v`
/// to `u`.
pub fn edge_shift(t: &Tree, u: Vertex, v: Vertex, w: Vertex) -> Result<Tree, TransformError> {
    let n = t.order();
    for x in [u, v, w] {
        if x >= n {
            return Err(DomainError::OutOfRange(format!("vertex {x} out of range")).into());
        }
    }
    if u == v || u == w || v == w {
        return Err(TransformError::RepeatedVertex { u, v, w });
    }
    if !t.has_edge(v, w) {
        return Err(TransformError::EdgeMissing(v, w));
    }
    if t.has_edge(u, w) {
        return Err(TransformError::EdgePresent(u, w));
    }
    if t.component_avoiding(w, v)[u] {
        return Err(TransformError::WouldDisconnect { u, v, w });
    }
    let mut out = t.clone();
    out.replace_edge((v, w), (u, w));
    Ok(out)
}

/// One step of [`extremalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShiftRecord {
    pub step: usize,
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    pub f_before: u128,
    pub f_after: u128,
}

/// Repeats edge shifts until at most one vertex has a degree strictly between
/// 1 and `delta`. Each shift moves a branch from the lowest-degree middle
/// vertex `v` to the highest-degree middle vertex `u` (ties by smallest id),
/// choosing the smallest-id neighbor `w` of `v` that does not lie towards `u`.
pub fn extremalize(t: &Tree, delta: usize) -> Result<Tree, TransformError> {
    extremalize_traced(t, delta).map(|(tree, _)| tree)
}

pub fn extremalize_traced(
    t: &Tree,
    delta: usize,
) -> Result<(Tree, Vec<ShiftRecord>), TransformError> {
    if delta < 2 {
        return Err(DomainError::BoundTooSmall(delta as u64).into());
    }
    check_bound(t, delta)?;
    let mut tree = t.clone();
    let mut f = f_index_u128(&tree);
    let mut trace = Vec::new();
    loop {
        let middle = middle_degree_vertices(&tree, delta)?;
        if middle.len() < 2 {
            return Ok((tree, trace));
        }
        let u = middle.0[0];
        let dv = middle
            .0
            .iter()
            .map(|&x| tree.degree(x))
            .min()
            .expect("nonempty");
        let v = *middle
            .0
            .iter()
            .filter(|&&x| x != u && tree.degree(x) == dv)
            .min()
            .expect("two middle vertices");
        let w = branch_away_from(&tree, v, u);
        let gain = shift_gain(tree.degree(u), tree.degree(v));
        tree.replace_edge((v, w), (u, w));
        let after = (f as i128 + gain) as u128;
        trace.push(ShiftRecord {
            step: trace.len(),
            u,
            v,
            w,
            f_before: f,
            f_after: after,
        });
        f = after;
    }
}

/// Smallest neighbor of `v` whose side of the tree (after cutting the edge
/// to `v`) does not contain `target`.
fn branch_away_from(t: &Tree, v: Vertex, target: Vertex) -> Vertex {
    // the first step on the v -> target path is the one excluded neighbor
    let mut prev = vec![usize::MAX; t.order()];
    prev[target] = target;
    let mut queue = VecDeque::from([target]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in t.neighbors(x) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let towards = prev[v];
    t.neighbors(v)
        .iter()
        .copied()
        .filter(|&y| y != towards)
        .min()
        .expect("a middle vertex has at least two neighbors")
}

/// Breadth-first greedy realization of a degree sequence: vertices are
/// numbered in non-increasing degree order and each, in turn, receives the
/// next unattached vertices as children until its degree is met.
///
/// `None` if the sequence is not the degree sequence of a tree.
pub fn realize_degree_sequence(seq: &DegreeSequence) -> Option<Tree> {
    let degrees = seq.as_slice();
    if degrees.is_empty() {
        return Some(Tree::path(1));
    }
    if !is_tree_degree_sequence(degrees) {
        return None;
    }
    let n = degrees.len();
    let mut parents = vec![0; n];
    let mut next = 1;
    for (v, &d) in degrees.iter().enumerate() {
        let children = if v == 0 { d } else { d - 1 };
        for _ in 0..children {
            parents[next] = v;
            next += 1;
        }
        if next == n {
            break;
        }
    }
    debug_assert_eq!(next, n);
    Some(Tree::from_parents(&parents))
}

/// An F-maximal tree on `n` vertices with maximum degree at most `delta`.
/// Hubs are filled breadth-first and the residue-degree vertex, if any, is
/// the last internal vertex.
pub fn construct_extremal(n: u64, delta: u64) -> Result<Tree, TransformError> {
    let spec = extremal_spec(n, delta)?;
    Ok(realize_degree_sequence(&spec.spec.to_sequence()).expect("extremal specs are realizable"))
}
