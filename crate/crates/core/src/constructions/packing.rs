use crate::bitset::VertexSet;
use crate::constructions::behrend_set;
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::partition::PartitionedGraph;

/// An `r`-partite graph with a list of transversal `K_r`'s such that every
/// `K_{r-1}` lies in at most one of them and no other `K_r` exists.
#[derive(Clone, Debug)]
pub struct PackingGraph {
    pub pg: PartitionedGraph,
    pub cliques: Vec<VertexSet>,
}

impl PackingGraph {
    pub fn r(&self) -> usize {
        self.pg.num_parts()
    }

    /// Check every packing invariant exhaustively.
    pub fn validate(&self) -> Result<()> {
        let r = self.r();
        let g = self.pg.graph();
        if let Some((u, v)) = self.pg.intra_part_edge() {
            return input(format!("edge ({u},{v}) inside a part"));
        }
        for c in &self.cliques {
            if !self.pg.is_transversal(c) {
                return input(format!("clique {c:?} is not transversal"));
            }
            if c.iter().any(|v| !c.difference(&VertexSet::singleton(v)).is_subset(g.neighbors(v))) {
                return input(format!("listed set {c:?} is not a clique"));
            }
        }
        for (i, a) in self.cliques.iter().enumerate() {
            if let Some(b) = self.cliques[i + 1..].iter().find(|b| a.intersection(b).len() + 1 >= r) {
                return input(format!("cliques {a:?} and {b:?} share a K_{}", r - 1));
            }
        }
        let listed: std::collections::HashSet<VertexSet> = self.cliques.iter().copied().collect();
        let mut stray = None;
        for_each_clique(g, r, &mut |c| {
            if stray.is_none() && !listed.contains(c) {
                stray = Some(*c);
            }
        });
        if let Some(c) = stray {
            return input(format!("unlisted K_{r} on {c:?}"));
        }
        Ok(())
    }
}

/// Calls `f` on every `r`-clique of `g`.
pub(crate) fn for_each_clique(g: &Graph, r: usize, f: &mut dyn FnMut(&VertexSet)) {
    fn rec(g: &Graph, r: usize, chosen: VertexSet, cand: VertexSet, f: &mut dyn FnMut(&VertexSet)) {
        if chosen.len() == r {
            f(&chosen);
            return;
        }
        if chosen.len() + cand.len() < r {
            return;
        }
        for v in &cand {
            let mut next = chosen;
            next.insert(v);
            rec(g, r, next, cand.intersection(g.neighbors(v)).intersection(&VertexSet::above(v)), f);
        }
    }
    rec(g, r, VertexSet::EMPTY, g.vertices(), f);
}

/// `m` vertex-disjoint transversal `K_r`'s over `r` parts of size `m`.
///
/// Vertex `(part i, index j)` is `i * m + j`; clique `j` is
/// `{ i * m + j : i < r }`.
pub fn trivial_packing(r: usize, m: usize) -> Result<PackingGraph> {
    if r < 2 || m < 1 {
        return input(format!("trivial packing needs r >= 2 and m >= 1, got r={r}, m={m}"));
    }
    let n = r * m;
    let edges = (0..m).flat_map(|j| {
        (0..r).flat_map(move |a| (a + 1..r).map(move |b| (a * m + j, b * m + j)))
    });
    let pg = PartitionedGraph::with_block_sizes(Graph::from_edges(n, edges)?, &vec![m; r])?;
    let cliques = (0..m).map(|j| (0..r).map(|i| i * m + j).collect()).collect();
    Ok(PackingGraph { pg, cliques })
}

/// Tripartite packing from a progression-free set `B = behrend_set(m)`.
///
/// Parts `X = [m]`, `Y = [2m]`, `Z = [3m]` (vertex ids `x`, `m + y`,
/// `3m + z`). For each `x ∈ X` and `b ∈ B` the triangle
/// `{x, x + b, x + 2b}` is added. Every edge lies in exactly one triangle.
pub fn rs_packing(m: usize) -> Result<PackingGraph> {
    if m < 2 {
        return input(format!("rs packing needs m >= 2, got {m}"));
    }
    let b = behrend_set(m);
    let (ys, zs) = (m, 3 * m);
    let mut cliques = Vec::with_capacity(m * b.len());
    let mut edges = Vec::new();
    for x in 0..m {
        for &d in &b {
            let (y, z) = (ys + x + d, zs + x + 2 * d);
            edges.extend([(x, y), (x, z), (y, z)]);
            cliques.push([x, y, z].into_iter().collect());
        }
    }
    let pg = PartitionedGraph::with_block_sizes(Graph::from_edges(6 * m, edges)?, &[m, 2 * m, 3 * m])?;
    Ok(PackingGraph { pg, cliques })
}

/// The partite complement of a validated packing. Each packing clique is a
/// transversal MIS of the result.
pub fn gadget(p: &PackingGraph) -> Result<PartitionedGraph> {
    p.validate()?;
    p.pg.partite_complement()
}
