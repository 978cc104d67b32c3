//! Euclidean representation numbers of graphs.
//!
//! A representation places the vertices of a graph in `R^m` so that
//! adjacent pairs are at one distance and non-adjacent pairs at another.
//! [`repnum`] computes the least such `m` from the adjacency spectrum,
//! [`embed`] constructs the points, and [`oracle`] checks both by brute force.

mod error;
pub mod embed;
pub mod exec;
pub mod graph;
pub mod oracle;
pub mod repnum;
pub mod spectral;
pub mod tolerance;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::Graph;
pub use tolerance::ToleranceConfig;
