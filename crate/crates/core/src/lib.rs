//! Counting maximal independent sets in clique-free graphs: exact
//! enumeration, extremal constructions and exhaustive small-case search.

pub mod bitset;
pub mod constructions;
pub mod engine;
mod error;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod matching;
pub mod partition;
pub mod search;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::{disjoint_union, Graph};
pub use hypergraph::{Hypergraph, HypergraphJson};
pub use matching::{FractionalMatching, MatchingJson, Weight, WeightJson};
pub use partition::{PartitionedGraph, PartsJson};

/// Crate version, embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
