use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{input, Result};
use crate::hypergraph::Hypergraph;

/// The `r`-uniform tight cycle on `0..k`: edges `{i, i+1, .., i+r-1} mod k`.
/// For `k = r` the windows coincide and there is a single edge.
pub fn tight_cycle(r: usize, k: usize) -> Result<Hypergraph> {
    if r < 2 || k < r {
        return input(format!("tight cycle needs k >= r >= 2, got r={r}, k={k}"));
    }
    let mut edges: Vec<VertexSet> = Vec::with_capacity(k);
    for i in 0..k {
        let e: VertexSet = (0..r).map(|j| (i + j) % k).collect();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(k, edges)
}

/// A partitioned `r`-graph whose transversal `k`-sets are all MIS's.
#[derive(Clone, Debug)]
pub struct HyperConstruction {
    pub hypergraph: Hypergraph,
    pub parts: Vec<VertexSet>,
}

/// Parts `V_0..V_{k-1}` (the first `n mod k` of size `⌈n/k⌉`, the rest
/// `⌊n/k⌋`, consecutive ids). Edges are the `r`-sets meeting some `V_i` in
/// exactly two vertices and each of `V_{i+1}, .., V_{i+r-2}` (indices mod
/// `k`) in exactly one.
///
/// Requires `r >= 3`, `k >= r - 1`, `n >= k`. At `r = 3, k = 2` the result
/// is well-formed but contains a `K^3_4` once a part has two vertices.
pub fn hypergraph_construction(r: usize, k: usize, n: usize) -> Result<HyperConstruction> {
    if r < 3 || k + 1 < r || n < k || k == 0 {
        return input(format!("need r >= 3, k >= r - 1, n >= k; got r={r}, k={k}, n={n}"));
    }
    if n > MAX_VERTICES {
        return input(format!("{n} vertices exceeds the cap of {MAX_VERTICES}"));
    }
    let (q, s) = (n / k, n % k);
    let mut parts = Vec::with_capacity(k);
    let mut next = 0;
    for i in 0..k {
        let size = if i < s { q + 1 } else { q };
        parts.push((next..next + size).collect::<VertexSet>());
        next += size;
    }
    let mut edges = Vec::new();
    for i in 0..k {
        let pair_part = parts[i].to_vec();
        let singles: Vec<Vec<usize>> = (1..=r - 2).map(|j| parts[(i + j) % k].to_vec()).collect();
        for (a, &u) in pair_part.iter().enumerate() {
            for &v in &pair_part[a + 1..] {
                let base: VertexSet = [u, v].into_iter().collect();
                product(&singles, base, &mut edges);
            }
        }
    }
    Ok(HyperConstruction { hypergraph: Hypergraph::new(n, edges)?, parts })
}

fn product(choices: &[Vec<usize>], acc: VertexSet, out: &mut Vec<VertexSet>) {
    match choices.split_first() {
        None => out.push(acc),
        Some((first, rest)) => {
            for &v in first {
                let mut next = acc;
                next.insert(v);
                product(rest, next, out);
            }
        }
    }
}

/// Every triple through vertex `0` on `n >= 4` vertices. `K^3_4`-free with
/// exactly `n - 1` MIS's of size two.
pub fn star_hypergraph(n: usize) -> Result<Hypergraph> {
    if n < 4 {
        return input(format!("star hypergraph needs n >= 4, got {n}"));
    }
    let edges = (1..n).flat_map(|a| (a + 1..n).map(move |b| [0, a, b].into_iter().collect::<VertexSet>()));
    Hypergraph::new(n, edges)
}
