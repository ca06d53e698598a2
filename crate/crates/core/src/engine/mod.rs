//! Counting and enumeration of maximal independent sets, plus the
//! structural procedures built on top of them.

mod checks;
mod count;
mod hyper;
mod reduction;
mod transversal;

pub use checks::{check_k5_hypothesis, five_mis_ratio, tripartite_t_bound_check, TBoundCheck};
pub use count::{
    count_all_mis, count_k_mis, count_k_mis_parallel, enumerate_k_mis, enumerate_mis, mis_size_histogram,
    MisQuery,
};
pub use hyper::{enumerate_hypergraph_k_mis, hypergraph_count_k_mis};
pub use reduction::{greedy_mis_partition, transversal_reduction, ReductionResult};
pub use transversal::{count_transversal_mis, enumerate_transversal_mis};
