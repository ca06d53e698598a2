//! Generators for the extremal graph and hypergraph families.

mod basic;
mod behrend;
mod blowup;
mod hyper;
mod packing;

pub use basic::{c4_leaves_graph, comatching, dominating_clique_graph};
pub use behrend::{behrend_set, has_three_term_ap};
pub use blowup::{
    blowup, build_gadget, theorem_a_construction, theorem_b_construction, Blowup, BlowupSpec, BlowupSpecJson,
    GadgetChoice, GadgetSource,
};
pub use hyper::{hypergraph_construction, star_hypergraph, tight_cycle, HyperConstruction};
pub use packing::{gadget, rs_packing, trivial_packing, PackingGraph};
