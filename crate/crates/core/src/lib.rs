//! Independent dominating sets of n-dimensional hypercubes.
//!
//! A set of vertices of the hypercube `Q_n` is *independent* when no two
//! members are adjacent (pairwise Hamming distance at least 2) and
//! *dominating* when every vertex of `Q_n` is a member or adjacent to one.
//! This crate constructs such sets for any dimension up to 62 by iterating
//! two procedures from small seed sets, certifies the results by exhaustive
//! sweep (dimensions up to 30), computes lower/upper bounds on the minimum
//! cardinality, and exactly solves the minimum problem for dimensions up
//! to 7 with a branch-and-bound search.
//!
//! ```
//! use cubedom::{build, certify, plan, Dimension};
//!
//! let n = Dimension::new(13).unwrap();
//! let recipe = plan(n);
//! let set = build(&recipe).unwrap();
//! assert_eq!(set.len(), 768);
//! let report = certify(&set);
//! assert!(report.independent && report.domination.confirmed());
//! ```

mod bounds;
mod construct;
mod error;
pub mod format;
mod set;
mod solve;
mod verify;
mod vertex;

pub use bounds::{
    alpha_known_exact, classify, lower_bound, upper_bound, DimensionCase, DimensionClass,
    UpperBound,
};
pub use construct::{
    build, expand_odd, extend_by_one, plan, seed_set, Recipe, Step, SEED_MAX_DIMENSION,
};
pub use error::Error;
pub use format::{read_set, write_set, ParseError, ParseErrorKind, ReadError};
pub use set::VertexSet;
pub use solve::{
    min_ids, verify_no_smaller, NoSmallerOutcome, SolveOutcome, SolveResult, SOLVE_MAX_DIMENSION,
};
pub use verify::{
    certify, certify_with, is_dominating, is_independent, BoundStatus, Domination, VerifyConfig,
    VerifyReport,
};
pub use vertex::{hamming_distance, neighbors, Dimension, Vertex};
