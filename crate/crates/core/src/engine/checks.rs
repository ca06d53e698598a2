use crate::engine::{count_k_mis, count_transversal_mis};
use crate::error::{input, Result};
use crate::partition::PartitionedGraph;

/// For a 5-partite graph on `V1..V5`: true iff `V1∪V3`, `V2∪V4` and
/// `V2∪V5` each span no edge.
pub fn check_k5_hypothesis(pg: &PartitionedGraph) -> Result<bool> {
    if pg.num_parts() != 5 {
        return input(format!("expected 5 parts, found {}", pg.num_parts()));
    }
    let p = pg.parts();
    let g = pg.graph();
    let edgeless = |a: usize, b: usize| {
        let u = p[a].union(&p[b]);
        u.iter().all(|v| !g.neighbors(v).intersects(&u))
    };
    Ok(edgeless(0, 2) && edgeless(1, 3) && edgeless(1, 4))
}

/// `count_k_mis(G, 5) / n^{5/2}`, reported for 5-partite instances.
pub fn five_mis_ratio(pg: &PartitionedGraph) -> f64 {
    let n = pg.graph().n() as f64;
    count_k_mis(pg.graph(), 5) as f64 / n.powf(2.5)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TBoundCheck {
    pub t: u64,
    pub n: usize,
    pub holds: bool,
}

/// Computes `T(G,3)` for a triangle-free tripartite graph and compares it with `|V(G)|`.
pub fn tripartite_t_bound_check(pg: &PartitionedGraph) -> Result<TBoundCheck> {
    if pg.num_parts() != 3 {
        return input(format!("expected 3 parts, found {}", pg.num_parts()));
    }
    if !pg.graph().is_triangle_free() {
        return input("graph contains a triangle");
    }
    let t = count_transversal_mis(pg);
    let n = pg.graph().n();
    Ok(TBoundCheck { t, n, holds: t <= n as u64 })
}
