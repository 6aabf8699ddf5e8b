//! Exact resistance-distance invariants of linear crossed octagonal chains.

pub mod closed_forms;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod matrix;

pub use error::{Error, Result};
pub use graph::{ChainGraph, Row, VertexId};
pub use matrix::{CharPoly, Rational, RationalMatrix};
