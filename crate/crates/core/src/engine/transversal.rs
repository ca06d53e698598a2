use std::ops::ControlFlow;

use crate::bitset::VertexSet;
use crate::partition::PartitionedGraph;

/// Visit every transversal MIS: one vertex per part, maximal in the whole graph.
///
/// Parts are processed smallest first. After each pick, every vertex of an
/// already processed part that is still undominated must have a neighbor
/// among the remaining admissible candidates, or the branch is cut.
pub fn enumerate_transversal_mis<F>(pg: &PartitionedGraph, mut visit: F)
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let g = pg.graph();
    let mut order: Vec<usize> = (0..pg.num_parts()).collect();
    order.sort_by_key(|&i| (pg.parts()[i].len(), i));
    let parts: Vec<VertexSet> = order.iter().map(|&i| pg.parts()[i]).collect();
    // suffix[i] = union of parts[i..]
    let mut suffix = vec![VertexSet::EMPTY; parts.len() + 1];
    for i in (0..parts.len()).rev() {
        suffix[i] = suffix[i + 1].union(&parts[i]);
    }
    let all = g.vertices();

    fn rec<F: FnMut(&VertexSet) -> ControlFlow<()>>(
        pg: &PartitionedGraph,
        parts: &[VertexSet],
        suffix: &[VertexSet],
        all: &VertexSet,
        depth: usize,
        chosen: VertexSet,
        blocked: VertexSet,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let g = pg.graph();
        if depth == parts.len() {
            if g.closed_neighborhood(&chosen) == *all {
                return visit(&chosen);
            }
            return ControlFlow::Continue(());
        }
        for v in parts[depth].difference(&blocked).iter() {
            let mut next = chosen;
            next.insert(v);
            let next_blocked = blocked.union(g.neighbors(v));
            let remaining = suffix[depth + 1].difference(&next_blocked);
            let done = all.difference(&suffix[depth + 1]);
            let undominated = done.difference(&next_blocked).difference(&next);
            if undominated.iter().any(|w| !g.neighbors(w).intersects(&remaining)) {
                continue;
            }
            rec(pg, parts, suffix, all, depth + 1, next, next_blocked, visit)?;
        }
        ControlFlow::Continue(())
    }

    if parts.is_empty() {
        return;
    }
    let _ = rec(pg, &parts, &suffix, &all, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut visit);
}

/// `T(G, k)`: the number of transversal MIS's with respect to the partition.
pub fn count_transversal_mis(pg: &PartitionedGraph) -> u64 {
    let mut n = 0;
    enumerate_transversal_mis(pg, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}
