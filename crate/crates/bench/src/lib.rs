//! Fixed inputs shared by the benchmarks.

use mis_lab::constructions::{blowup, comatching, theorem_b_construction, tight_cycle, BlowupSpec, GadgetChoice};
use mis_lab::{Graph, PartitionedGraph};

/// Blowup of the 5-cycle with every part size `m`.
pub fn c5_blowup(m: usize) -> PartitionedGraph {
    let spec = BlowupSpec::uniform(tight_cycle(2, 5).unwrap(), m, &GadgetChoice::default()).unwrap();
    blowup(&spec).unwrap().into_partitioned()
}

/// Triangle-free blowup of the 6-cycle.
pub fn c6_blowup(m: usize) -> PartitionedGraph {
    theorem_b_construction(6, 3, m).unwrap().into_partitioned()
}

/// A 10-vertex graph with a nontrivial automorphism group.
pub fn canon_fixture() -> Graph {
    let g = comatching(10).unwrap().into_graph();
    let perm = [3, 7, 0, 9, 1, 5, 8, 2, 6, 4];
    g.permute(&perm).unwrap()
}
