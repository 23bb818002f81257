//! Exact combinatorics for r-uniform hypergraph Ramsey problems.
//!
//! The crate is organised around a small number of concrete objects:
//!
//! * [`Hypergraph`] — an r-uniform hypergraph on vertices `0..order`, with
//!   hyperedges kept sorted by colexicographic rank;
//! * [`trees`] — r-uniform trees and loose paths: four equivalent recognizers,
//!   enumeration up to isomorphism, free hyperedges, degree-forced embeddings;
//! * [`coloring`] — weak proper colorings, the weak chromatic number and the
//!   minimum color-class statistic, with closed forms for complete hosts;
//! * [`bounds`] — a registry of guarded lower/upper bound formulas for
//!   R(T, K_n; r) and the intervals they induce;
//! * [`witness`] — explicit two-colorings certifying lower bounds, and a
//!   verifier that hunts for red patterns and blue cliques;
//! * [`search`] — an exhaustive, pruned backtracking decision procedure for
//!   the arrowing relation and small exact Ramsey numbers.
//!
//! Everything is deterministic: enumeration orders are fixed, searches return
//! first witnesses under documented exploration orders, and repeated runs
//! produce identical results.

pub mod bounds;
pub mod coloring;
pub mod combin;
pub mod hypergraph;
pub mod iso;
pub mod search;
pub mod selfcheck;
pub mod trees;
pub mod witness;

pub use hypergraph::{ComponentPartition, Hyperedge, Hypergraph};
pub use iso::{canonical_form, contains_sub, is_isomorphic, CanonicalForm};
pub use trees::{loose_cycle_c4, loose_path, TreeMethod};
pub use witness::{Color, TwoColoring};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

use thiserror::Error;

/// Errors shared across the crate. Search verdicts (counterexamples, budget
/// exhaustion) are not errors; they live in the result enums of their ops.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {edge:?} is not a valid {r}-uniform hyperedge on {order} vertices")]
    InvalidEdge {
        edge: Vec<usize>,
        r: usize,
        order: usize,
    },
    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("no {r}-uniform loose path has order {m}")]
    InvalidPathOrder { m: usize, r: usize },
    #[error("hypergraph is not a tree")]
    NotATree,
    #[error("order {order} exceeds the cap {cap} for this operation")]
    CapExceeded { order: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
