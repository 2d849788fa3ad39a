//! Exact combinatorics of graded (Bratteli) graphs: path counting, central
//! Markov measures, extreme-character evaluation, adic transformations and
//! finite-level boundary diagnostics.
//!
//! All internal arithmetic is exact (`BigUint` / `BigRational`); floating
//! point appears only when callers ask for it at an output boundary.

#![forbid(unsafe_code)]

pub mod adic;
pub mod budget;
pub mod characters;
pub mod diagnostics;
pub mod error;
pub mod generators;
pub mod graph;
pub mod measures;
pub mod partition;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{FinitePath, GradedGraph, PathStep, VertexId};
pub use partition::Partition;
