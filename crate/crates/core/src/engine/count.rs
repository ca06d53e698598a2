use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::partition::PartitionedGraph;

/// What to enumerate: all MIS's, those of size `k`, or transversal ones.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MisQuery {
    pub k: Option<usize>,
    pub transversal: bool,
    pub limit: Option<u64>,
}

impl MisQuery {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn size(k: usize) -> Self {
        MisQuery { k: Some(k), ..Self::default() }
    }

    pub fn transversal(parts: usize) -> Self {
        MisQuery { k: Some(parts), transversal: true, limit: None }
    }

    pub fn with_limit(mut self, limit: u64) -> Self {
        self.limit = Some(limit);
        self
    }

    /// Run the query and return how many sets were found (capped by `limit`).
    pub fn count(&self, g: &Graph, parts: Option<&PartitionedGraph>) -> Result<u64> {
        let mut n = 0;
        self.enumerate(g, parts, |_| {
            n += 1;
            ControlFlow::Continue(())
        })?;
        Ok(n)
    }

    pub fn enumerate<F>(&self, g: &Graph, parts: Option<&PartitionedGraph>, mut visit: F) -> Result<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        let limit = self.limit.unwrap_or(u64::MAX);
        let mut seen = 0u64;
        let capped = |s: &VertexSet| {
            if seen >= limit {
                return ControlFlow::Break(());
            }
            seen += 1;
            let flow = visit(s);
            if seen >= limit {
                ControlFlow::Break(())
            } else {
                flow
            }
        };
        if self.transversal {
            let pg = match parts {
                Some(pg) if pg.graph() == g => pg,
                Some(_) => return input("partition belongs to a different graph"),
                None => return input("transversal query needs a partition"),
            };
            if self.k.is_some_and(|k| k != pg.num_parts()) {
                return input(format!("transversal query with k != {} parts", pg.num_parts()));
            }
            super::enumerate_transversal_mis(pg, capped);
        } else {
            enumerate_mis(g, self.k, capped);
        }
        Ok(())
    }
}

/// Ordered backtracking over maximal independent sets.
///
/// Vertices are added in increasing order. `cand` holds vertices above the
/// last pick with no neighbor in the current set; `pending` holds skipped
/// vertices below it that are still undominated and so must acquire a
/// neighbor among later picks.
struct Enumerator<'a, F> {
    g: &'a Graph,
    target: Option<usize>,
    visit: F,
    stopped: bool,
}

impl<F: FnMut(&VertexSet) -> ControlFlow<()>> Enumerator<'_, F> {
    fn emit(&mut self, s: &VertexSet) {
        if (self.visit)(s).is_break() {
            self.stopped = true;
        }
    }

    fn run(&mut self) {
        let all = self.g.vertices();
        if self.target == Some(0) {
            if self.g.n() == 0 {
                self.emit(&VertexSet::EMPTY);
            }
            return;
        }
        if self.g.n() == 0 {
            if self.target.is_none() {
                self.emit(&VertexSet::EMPTY);
            }
            return;
        }
        self.descend(VertexSet::EMPTY, 0, all, VertexSet::EMPTY);
    }

    /// Explore all extensions whose smallest new vertex is `v`.
    fn branch(&mut self, chosen: VertexSet, size: usize, cand: VertexSet, pending: VertexSet, v: usize) {
        let nv = self.g.neighbors(v);
        let skipped = cand.intersection(&VertexSet::below(v));
        let new_pending = pending.union(&skipped).difference(nv);
        let new_cand = cand.intersection(&VertexSet::above(v)).difference(nv);
        if new_pending.iter().any(|w| !self.g.neighbors(w).intersects(&new_cand)) {
            return;
        }
        let mut next = chosen;
        next.insert(v);
        self.descend(next, size + 1, new_cand, new_pending);
    }

    fn descend(&mut self, chosen: VertexSet, size: usize, cand: VertexSet, pending: VertexSet) {
        if self.stopped {
            return;
        }
        match self.target {
            Some(k) if size == k => {
                if cand.is_empty() && pending.is_empty() {
                    self.emit(&chosen);
                }
                return;
            }
            Some(k) if size + cand.len() < k => return,
            _ => {}
        }
        if cand.is_empty() {
            if pending.is_empty() {
                self.emit(&chosen);
            }
            return;
        }
        for v in &cand {
            self.branch(chosen, size, cand, pending, v);
            if self.stopped {
                return;
            }
        }
    }
}

/// Visit every maximal independent set of `g`, or only those of size `k`.
pub fn enumerate_mis<F>(g: &Graph, k: Option<usize>, visit: F)
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    Enumerator { g, target: k, visit, stopped: false }.run();
}

/// Visit every maximal independent set of size exactly `k`.
pub fn enumerate_k_mis<F>(g: &Graph, k: usize, visit: F)
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    enumerate_mis(g, Some(k), visit);
}

/// Number of maximal independent sets of size exactly `k`.
pub fn count_k_mis(g: &Graph, k: usize) -> u64 {
    count(g, Some(k))
}

/// Number of maximal independent sets of any size.
pub fn count_all_mis(g: &Graph) -> u64 {
    count(g, None)
}

fn count(g: &Graph, k: Option<usize>) -> u64 {
    let mut n = 0u64;
    enumerate_mis(g, k, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// `hist[s]` = number of MIS's of size `s`, for `s` in `0..=n`.
pub fn mis_size_histogram(g: &Graph) -> Vec<u64> {
    let mut hist = vec![0u64; g.n() + 1];
    enumerate_mis(g, None, |s| {
        hist[s.len()] += 1;
        ControlFlow::Continue(())
    });
    hist
}

/// [`count_k_mis`] with the search tree split on its first vertex across
/// the rayon pool. Each worker owns its scratch state; totals are summed.
pub fn count_k_mis_parallel(g: &Graph, k: usize) -> u64 {
    if k == 0 || g.n() == 0 {
        return count_k_mis(g, k);
    }
    let all = g.vertices();
    (0..g.n())
        .into_par_iter()
        .map(|v| {
            let mut n = 0u64;
            let mut e = Enumerator {
                g,
                target: Some(k),
                visit: |_: &VertexSet| {
                    n += 1;
                    ControlFlow::Continue(())
                },
                stopped: false,
            };
            e.branch(VertexSet::EMPTY, 0, all, VertexSet::EMPTY, v);
            n
        })
        .sum()
}
