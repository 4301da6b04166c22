//! Degree-based topological indices of trees and trees with maximum F-index
//! (sum of cubed degrees) under a maximum-degree bound.
//!
//! The extremal degree spec is available three independent ways, which the
//! crate cross-checks against each other:
//!
//! * [`extremal::extremal_spec`]: closed form, constant time.
//! * [`ilp::solve`]: exact integer program over degree-class and edge-type
//!   counts.
//! * [`enumerate::max_f_search`]: exhaustive isomorphism-free enumeration
//!   of free trees.
//!
//! ```
//! use fextremal::{extremal::extremal_spec, transform::construct_extremal, invariants::f_index_u128};
//!
//! let spec = extremal_spec(12, 4).unwrap();
//! assert_eq!(spec.spec.to_string(), "4^3,2^1,1^8");
//! let tree = construct_extremal(12, 4).unwrap();
//! assert_eq!(f_index_u128(&tree), spec.f_value);
//! ```

pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod ilp;
pub mod invariants;
pub mod io;
pub mod routes;
pub mod transform;

pub use extremal::{extremal_spec, f_max_formula, DomainError, ExtremalSpec};
pub use graph::{
    canonical_code, validate_tree, DegreeSequence, DegreeSpec, EdgeTypeMatrix, Tree, TreeError,
};
pub use invariants::{f_index, IndexValue};
