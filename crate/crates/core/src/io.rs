//! Tree file formats: plain edge lists, JSON and Graphviz DOT.
//!
//! Edge-list text is the vertex count on the first line followed by one
//! `u v` pair per line (0-based). JSON is `{"n": 4, "edges": [[0,1], ...]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Tree, TreeError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid JSON tree: {0}")]
    Json(#[from] serde_json::Error),
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("not a tree: {0}")]
    Invalid(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Tree> for TreeJson {
    fn from(t: &Tree) -> Self {
        Self {
            n: t.order(),
            edges: t.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<TreeJson> for Tree {
    type Error = TreeError;

    fn try_from(raw: TreeJson) -> Result<Self, TreeError> {
        let edges: Vec<_> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
        Tree::new(raw.n, &edges)
    }
}

/// Raw `(n, edges)` from either text format, detected by a leading `{`.
pub fn parse_edges(text: &str) -> Result<(usize, Vec<(usize, usize)>), ParseError> {
    if text.trim_start().starts_with('{') {
        let raw: TreeJson = serde_json::from_str(text)?;
        return Ok((raw.n, raw.edges.iter().map(|&[u, v]| (u, v)).collect()));
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(ParseError::Empty)?;
    let n = first.parse::<usize>().map_err(|e| ParseError::Syntax {
        line,
        msg: format!("bad vertex count `{first}`: {e}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut fields = l.split_whitespace();
        let mut next = || -> Result<usize, ParseError> {
            let f = fields.next().ok_or_else(|| ParseError::Syntax {
                line,
                msg: "expected two vertex ids".into(),
            })?;
            f.parse().map_err(|e| ParseError::Syntax {
                line,
                msg: format!("bad vertex id `{f}`: {e}"),
            })
        };
        let (u, v) = (next()?, next()?);
        if fields.next().is_some() {
            return Err(ParseError::Syntax {
                line,
                msg: "trailing fields".into(),
            });
        }
        edges.push((u, v));
    }
    Ok((n, edges))
}

pub fn parse_tree(text: &str) -> Result<Tree, LoadError> {
    let (n, edges) = parse_edges(text)?;
    Ok(Tree::new(n, &edges)?)
}

pub fn to_edge_list(t: &Tree) -> String {
    let mut out = format!("{}\n", t.order());
    for &(u, v) in t.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Single-line JSON, as used for streamed output.
pub fn to_json(t: &Tree) -> String {
    serde_json::to_string(&TreeJson::from(t)).expect("tree JSON is infallible")
}

/// Undirected DOT graph with unlabeled point-style vertices.
pub fn to_dot(t: &Tree, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    out.push_str("  node [shape=point, width=0.12];\n");
    out.push_str("  edge [penwidth=1.2];\n");
    for v in 0..t.order() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in t.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
