use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::engine::{count_k_mis, count_transversal_mis, enumerate_k_mis};
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::partition::PartitionedGraph;

/// Splits a triangle-free graph into `k + 1` independent sets using a `k`-MIS
/// `I = {v_1 < .. < v_k}`: block `j < k` holds the vertices adjacent to
/// `v_{j+1}` but to no earlier `v_i`, and the last block is `I` itself.
///
/// Blocks may be empty; the returned vector always has `k + 1` entries.
pub fn greedy_mis_partition(g: &Graph, mis: &VertexSet) -> Result<Vec<VertexSet>> {
    if !g.is_triangle_free() {
        return input("graph contains a triangle");
    }
    if !g.is_maximal_independent(mis)? {
        return input(format!("{mis:?} is not a maximal independent set"));
    }
    let mut covered = *mis;
    let mut blocks = Vec::with_capacity(mis.len() + 1);
    for v in mis {
        let block = g.neighbors(v).difference(&covered);
        covered = covered.union(&block);
        blocks.push(block);
    }
    blocks.push(*mis);
    Ok(blocks)
}

/// Output of [`transversal_reduction`].
#[derive(Clone, Debug)]
pub struct ReductionResult {
    /// Induced subgraph with the best `k`-partition found.
    pub subgraph: PartitionedGraph,
    /// `vertex_map[i]` is the original vertex behind subgraph vertex `i`.
    pub vertex_map: Vec<usize>,
    /// Per-block MIS profile `c` that was selected.
    pub composition: Vec<usize>,
    /// `m_c`: number of `k`-MIS's of the input with profile `c`.
    pub composition_count: u64,
    /// `T(G', k)` for the returned partition.
    pub achieved_t: u64,
    /// `m(G, k)` of the input graph.
    pub source_m: u64,
    pub retries_used: usize,
    pub seed: u64,
    /// Whether `achieved_t >= (4k)^{-k} * source_m`.
    pub bound_met: bool,
}

/// Reduce `k`-MIS counting in a triangle-free graph to transversal counting.
///
/// Every `k`-MIS is classified by how many of its vertices fall in each
/// block of [`greedy_mis_partition`] (taken on the first `k`-MIS found). The
/// most frequent profile `c` selects the blocks with `c_i > 0`; each such
/// block is split at random into `c_i` nonempty sub-blocks. Each round draws
/// one uniform split and one split anchored on a random MIS of profile `c`
/// (its vertices forced into distinct sub-blocks); the best split over all
/// rounds is returned.
pub fn transversal_reduction(g: &Graph, k: usize, retries: usize, seed: u64) -> Result<ReductionResult> {
    if !g.is_triangle_free() {
        return input("graph contains a triangle");
    }
    if k == 0 {
        return input("k must be positive");
    }
    let mut all_mis = Vec::new();
    enumerate_k_mis(g, k, |s| {
        all_mis.push(*s);
        ControlFlow::Continue(())
    });
    let first = *all_mis.first().ok_or_else(|| Error::Domain(format!("graph has no MIS of size {k}")))?;
    let blocks = greedy_mis_partition(g, &first)?;

    let profile = |s: &VertexSet| blocks.iter().map(|b| b.intersection(s).len()).collect::<Vec<_>>();
    let mut by_profile: BTreeMap<Vec<usize>, Vec<VertexSet>> = BTreeMap::new();
    for s in &all_mis {
        by_profile.entry(profile(s)).or_default().push(*s);
    }
    let (composition, members) = by_profile
        .iter()
        .fold(None::<(&Vec<usize>, &Vec<VertexSet>)>, |best, (c, ms)| match best {
            Some((_, bm)) if bm.len() >= ms.len() => best,
            _ => Some((c, ms)),
        })
        .expect("at least one profile");

    let keep = blocks
        .iter()
        .zip(composition)
        .filter(|(_, &c)| c > 0)
        .fold(VertexSet::EMPTY, |acc, (b, _)| acc.union(b));
    let vertex_map = keep.to_vec();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in vertex_map.iter().enumerate() {
        index[v] = i;
    }
    let sub = g.induced(&keep)?;
    let local = |s: &VertexSet| -> Vec<usize> { s.iter().map(|v| index[v]).collect() };
    let pieces: Vec<(Vec<usize>, usize)> =
        blocks.iter().zip(composition).filter(|(_, &c)| c > 0).map(|(b, &c)| (local(b), c)).collect();

    let ceiling = count_k_mis(&sub, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, PartitionedGraph)> = None;
    let mut rounds = 0;
    for _ in 0..retries.max(1) {
        rounds += 1;
        let anchor = members[rng.gen_range(0..members.len())];
        let anchor_local: VertexSet = local(&anchor).into_iter().collect();
        for anchored in [false, true] {
            let parts = split(&pieces, anchored.then_some(&anchor_local), &mut rng);
            let pg = PartitionedGraph::new(sub.clone(), parts)?;
            let t = count_transversal_mis(&pg);
            if best.as_ref().is_none_or(|(bt, _)| t > *bt) {
                best = Some((t, pg));
            }
        }
        if best.as_ref().is_some_and(|(t, _)| *t >= ceiling) {
            break;
        }
    }
    let (achieved_t, subgraph) = best.expect("at least one round");
    let source_m = all_mis.len() as u64;
    Ok(ReductionResult {
        subgraph,
        vertex_map,
        composition: composition.clone(),
        composition_count: members.len() as u64,
        achieved_t,
        source_m,
        retries_used: rounds,
        seed,
        bound_met: meets_bound(achieved_t, source_m, k),
    })
}

/// `t * (4k)^k >= m`, in exact integer arithmetic.
fn meets_bound(t: u64, m: u64, k: usize) -> bool {
    match (4 * k as u128).checked_pow(k as u32) {
        Some(scale) => (t as u128).saturating_mul(scale) >= m as u128,
        // (4k)^k exceeds any u64 count, so the bound is below one.
        None => t >= 1 || m == 0,
    }
}

/// Assign each block's vertices to `c` sub-blocks, none of them empty.
///
/// Uniform assignments are drawn by rejection; an anchor's vertices in a
/// block are first placed in distinct sub-blocks.
fn split(pieces: &[(Vec<usize>, usize)], anchor: Option<&VertexSet>, rng: &mut ChaCha8Rng) -> Vec<VertexSet> {
    let mut parts = Vec::new();
    for (block, c) in pieces {
        let c = *c;
        let fixed: Vec<usize> = anchor.map_or(Vec::new(), |a| block.iter().copied().filter(|v| a.contains(*v)).collect());
        let mut slots: Vec<usize> = (0..c).collect();
        slots.shuffle(rng);
        let mut assignment = vec![VertexSet::EMPTY; c];
        for (v, &slot) in fixed.iter().zip(&slots) {
            assignment[slot].insert(*v);
        }
        let free: Vec<usize> = block.iter().copied().filter(|v| !fixed.contains(v)).collect();
        let base = assignment.clone();
        let mut placed = false;
        for _ in 0..64 {
            let mut trial = base.clone();
            for &v in &free {
                trial[rng.gen_range(0..c)].insert(v);
            }
            if trial.iter().all(|s| !s.is_empty()) {
                assignment = trial;
                placed = true;
                break;
            }
        }
        if !placed {
            // Fill empty sub-blocks first, then scatter the rest.
            let mut order = free.clone();
            order.shuffle(rng);
            let mut it = order.into_iter();
            for slot in assignment.iter_mut().filter(|s| s.is_empty()) {
                slot.insert(it.next().expect("block has at least c vertices"));
            }
            for v in it {
                assignment[rng.gen_range(0..c)].insert(v);
            }
        }
        parts.extend(assignment);
    }
    parts
}
