use std::ops::ControlFlow;

use crate::bitset::VertexSet;
use crate::hypergraph::Hypergraph;

/// Visit every maximal independent set of size `k` in a hypergraph.
///
/// A set is independent when it contains no edge, and maximal when adding
/// any outside vertex completes an edge.
pub fn enumerate_hypergraph_k_mis<F>(h: &Hypergraph, k: usize, mut visit: F)
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let n = h.n();
    if k > n {
        return;
    }
    let incident: Vec<Vec<VertexSet>> =
        (0..n).map(|x| h.edges().iter().copied().filter(|e| e.contains(x)).collect()).collect();

    // `w` is blocked by `s` when some edge through `w` has the rest inside `s`.
    let completes = |s: &VertexSet, w: usize| {
        let mut ext = *s;
        ext.insert(w);
        incident[w].iter().any(|e| e.is_subset(&ext))
    };

    fn rec<F: FnMut(&VertexSet) -> ControlFlow<()>>(
        n: usize,
        k: usize,
        start: usize,
        chosen: VertexSet,
        completes: &dyn Fn(&VertexSet, usize) -> bool,
        visit: &mut F,
    ) -> ControlFlow<()> {
        if chosen.len() == k {
            if (0..n).all(|w| chosen.contains(w) || completes(&chosen, w)) {
                return visit(&chosen);
            }
            return ControlFlow::Continue(());
        }
        let need = k - chosen.len();
        for v in start..n {
            if n - v < need {
                break;
            }
            if completes(&chosen, v) {
                continue;
            }
            let mut next = chosen;
            next.insert(v);
            rec(n, k, v + 1, next, completes, visit)?;
        }
        ControlFlow::Continue(())
    }

    let _ = rec(n, k, 0, VertexSet::EMPTY, &completes, &mut visit);
}

/// Number of maximal independent sets of size `k` in `h`.
pub fn hypergraph_count_k_mis(h: &Hypergraph, k: usize) -> u64 {
    let mut n = 0;
    enumerate_hypergraph_k_mis(h, k, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_three_graph() {
        let h = Hypergraph::new(4, []).unwrap();
        assert_eq!(hypergraph_count_k_mis(&h, 4), 1);
        assert_eq!(hypergraph_count_k_mis(&h, 3), 0);
    }

    #[test]
    fn graph_edges_behave_like_a_graph() {
        let h = Hypergraph::from_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(hypergraph_count_k_mis(&h, 2), 4);
    }
}
