//! Builders for the stock graded graphs.

pub mod multidim;
pub mod pascal;
pub mod solvable;
pub mod young;

pub use multidim::multidim_young_graph;
pub use pascal::pascal_graph;
pub use solvable::solvable_group_graph;
pub use young::young_graph;

/// Which builder a graph came from. Determines label conventions and the
/// default adic order of incoming edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Young,
    Pascal,
    Multidim,
    Solvable,
}
