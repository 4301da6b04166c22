//! Trees on dense vertex ids `0..n`, degree bookkeeping and canonical forms.

mod canon;
mod degree;
mod edge_types;

pub use canon::{canonical_code, centers};
pub use degree::{is_tree_degree_sequence, DegreeSequence, DegreeSpec, SpecParseError};
pub use edge_types::EdgeTypeMatrix;

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge list contains a cycle")]
    HasCycle,
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("graph is not connected")]
    NotConnected,
}

/// A labeled tree. Immutable once built; every constructor validates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Tree {
    /// Validates an edge list as a tree on `n` vertices.
    ///
    /// Checks run in a fixed order so the reported error is deterministic:
    /// id range, self-loops, duplicates, then the edge count. More than
    /// `n - 1` edges always closes a cycle and is reported as
    /// [`TreeError::HasCycle`]; fewer is [`TreeError::WrongEdgeCount`]; exactly
    /// `n - 1` edges that fail to connect is [`TreeError::NotConnected`].
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(TreeError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        if edges.len() > n - 1 {
            return Err(TreeError::HasCycle);
        }
        if edges.len() < n - 1 {
            return Err(TreeError::WrongEdgeCount {
                expected: n - 1,
                found: edges.len(),
            });
        }
        if reachable_from(&adj, 0) != n {
            return Err(TreeError::NotConnected);
        }
        Ok(Self {
            adj,
            edges: edges.to_vec(),
        })
    }

    /// Builds a tree from a parent array; `parents[0]` is ignored (root).
    pub(crate) fn from_parents(parents: &[Vertex]) -> Self {
        let edges: Vec<_> = parents
            .iter()
            .enumerate()
            .skip(1)
            .map(|(v, &p)| (p, v))
            .collect();
        Self::from_trusted_edges(parents.len(), edges)
    }

    /// Skips validation. Callers guarantee the edge list is a tree.
    pub(crate) fn from_trusted_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert_eq!(edges.len() + 1, n);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Self { adj, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_trusted_edges(n, edges)
    }

    pub fn star(n: usize) -> Self {
        let edges = (1..n).map(|v| (0, v)).collect();
        Self::from_trusted_edges(n, edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degree of each vertex indexed by id (unsorted).
    pub fn vertex_degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Non-increasing degree sequence. Empty for the single-vertex tree.
    pub fn degrees(&self) -> DegreeSequence {
        if self.order() == 1 {
            return DegreeSequence::default();
        }
        DegreeSequence::from_unsorted(self.vertex_degrees())
    }

    pub fn degree_spec(&self) -> DegreeSpec {
        DegreeSpec::from_sequence(&self.degrees())
    }

    pub fn edge_type_counts(&self) -> EdgeTypeMatrix {
        EdgeTypeMatrix::of_tree(self)
    }

    /// Returns the tree with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_trusted_edges(self.order(), edges)
    }

    /// Vertices reachable from `start` without stepping onto `blocked`.
    pub(crate) fn component_avoiding(&self, start: Vertex, blocked: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[start] = true;
        seen[blocked] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen[blocked] = false;
        seen
    }

    pub(crate) fn replace_edge(&mut self, (a, b): (Vertex, Vertex), (c, d): (Vertex, Vertex)) {
        let pos = self
            .edges
            .iter()
            .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
            .expect("edge to replace must exist");
        self.edges[pos] = (c, d);
        self.adj[a].retain(|&x| x != b);
        self.adj[b].retain(|&x| x != a);
        self.adj[c].push(d);
        self.adj[d].push(c);
    }
}

fn reachable_from(adj: &[Vec<Vertex>], start: Vertex) -> usize {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

/// Validates `edges` as a tree on `n` vertices.
pub fn validate_tree(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree, TreeError> {
    Tree::new(n, edges)
}
