//! Graph classes defined by a single forbidden induced minor.
//!
//! Membership tests and structural witnesses, a classifier for the
//! isomorphism and clique-width status of `H`-induced-minor-free graphs,
//! isomorphism-preserving reductions, class-specific isomorphism deciders,
//! and clique-width expression builders, each checked against brute-force
//! oracles.

pub mod catalog;
pub mod cli;
pub mod cwx;
pub mod dichotomy;
pub mod error;
pub mod gen;
pub mod graph;
pub mod iso;
pub mod oracles;
pub mod reductions;
pub mod structure;

pub use error::{Budget, Error, Result};
pub use graph::{ColoredGraph, Graph, Vertex, VertexTag};
