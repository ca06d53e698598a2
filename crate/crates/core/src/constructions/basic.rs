use crate::error::{input, Result};
use crate::graph::Graph;
use crate::partition::PartitionedGraph;

/// `K_{⌊n/2⌋,⌈n/2⌉}` minus a matching of size `⌊n/2⌋`.
///
/// Part `A = 0..⌊n/2⌋`, part `B = ⌊n/2⌋..n`. The removed pairs are
/// `(i, ⌊n/2⌋ + i)`; for odd `n` the last vertex of `B` is unmatched.
pub fn comatching(n: usize) -> Result<PartitionedGraph> {
    if n < 2 {
        return input(format!("comatching needs n >= 2, got {n}"));
    }
    let a = n / 2;
    let edges = (0..a).flat_map(|i| (a..n).filter(move |&j| j != a + i).map(move |j| (i, j)));
    PartitionedGraph::with_block_sizes(Graph::from_edges(n, edges)?, &[a, n - a])
}

/// A `K_{t-2}` on `0..t-2` joined to every other vertex; the remaining
/// `n - t + 2` vertices are independent. `K_t`-free with exactly `t - 2`
/// MIS's of size one.
pub fn dominating_clique_graph(t: usize, n: usize) -> Result<Graph> {
    if t < 3 || n < t {
        return input(format!("need n >= t >= 3, got t={t}, n={n}"));
    }
    let core = t - 2;
    let edges = (0..core).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// The 4-cycle `0-1-2-3` with a pendant vertex on `0` (vertex 4) and one
/// on `2` (vertex 5). Triangle-free with three MIS's of size two.
pub fn c4_leaves_graph() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).expect("fixed edge list")
}
