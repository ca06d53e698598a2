//! Exhaustive scans over labeled graphs and 3-graphs on few vertices.
//!
//! The scan walks include/exclude decisions edge by edge. An edge is only
//! included when it does not complete a forbidden clique, so every pruned
//! branch skips all of its supersets at once. The first few decisions are
//! fixed per work unit and units run in parallel; results come back in unit
//! order, which keeps every merge independent of the worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::canon::canonical_form;
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Largest `n` accepted by the graph scan.
pub const GRAPH_SCAN_MAX_N: usize = 8;
/// Largest `n` accepted by the 3-graph scan.
pub const HYPER_SCAN_MAX_N: usize = 6;

const PREFIX_EDGES: usize = 8;

/// Maximum MIS counts over every structure the scan visits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub r: usize,
    pub t: Option<usize>,
    /// Maximum total number of maximal independent sets.
    pub max_all: u64,
    /// `max_by_size[k]` is the maximum number of size-`k` ones.
    pub max_by_size: Vec<u64>,
    pub scanned: u64,
}

impl Census {
    fn new(n: usize, r: usize, t: Option<usize>) -> Self {
        Census { n, r, t, max_all: 0, max_by_size: vec![0; n + 1], scanned: 0 }
    }

    pub fn max_for(&self, k: Option<usize>) -> u64 {
        match k {
            None => self.max_all,
            Some(k) => self.max_by_size.get(k).copied().unwrap_or(0),
        }
    }

    fn record(&mut self, hist: &[u64]) {
        self.scanned += 1;
        self.max_all = self.max_all.max(hist.iter().sum());
        for (m, &h) in self.max_by_size.iter_mut().zip(hist) {
            *m = (*m).max(h);
        }
    }

    fn merge(mut self, other: Census) -> Census {
        self.scanned += other.scanned;
        self.max_all = self.max_all.max(other.max_all);
        for (m, o) in self.max_by_size.iter_mut().zip(other.max_by_size) {
            *m = (*m).max(o);
        }
        self
    }
}

fn objective(hist: &[u64], k: Option<usize>) -> u64 {
    match k {
        None => hist.iter().sum(),
        Some(k) => hist.get(k).copied().unwrap_or(0),
    }
}

fn mask_set(m: u32) -> VertexSet {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

/// Keeps the `cap` smallest distinct strings.
struct Witnesses {
    set: BTreeSet<String>,
    cap: usize,
}

impl Witnesses {
    fn insert(&mut self, w: String) {
        if self.set.len() == self.cap && self.set.last().is_some_and(|last| w >= *last) {
            return;
        }
        self.set.insert(w);
        if self.set.len() > self.cap {
            self.set.pop_last();
        }
    }

    fn merge(mut self, other: Witnesses) -> Witnesses {
        for w in other.set {
            self.insert(w);
        }
        self
    }
}

// ---------------------------------------------------------------------------
// graphs

/// Size histogram of maximal independent sets for a graph given as `u32` rows.
pub(crate) fn small_histogram(adj: &[u32], hist: &mut [u64]) {
    hist.iter_mut().for_each(|h| *h = 0);
    let all = if adj.len() == 32 { u32::MAX } else { (1u32 << adj.len()) - 1 };
    walk(adj, 0, all, 0, hist);
}

fn walk(adj: &[u32], size: usize, cand: u32, pending: u32, hist: &mut [u64]) {
    if cand == 0 {
        if pending == 0 {
            hist[size] += 1;
        }
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let bit = 1u32 << v;
        let next = cand & !(bit | (bit - 1)) & !adj[v];
        let still = (pending | (cand & (bit - 1))) & !adj[v];
        if covered(adj, still, next) {
            walk(adj, size + 1, next, still, hist);
        }
        rest &= rest - 1;
    }
}

fn covered(adj: &[u32], need: u32, by: u32) -> bool {
    let mut m = need;
    while m != 0 {
        if adj[m.trailing_zeros() as usize] & by == 0 {
            return false;
        }
        m &= m - 1;
    }
    true
}

fn clique_within(adj: &[u32], set: u32, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (set.count_ones() as usize) < size {
        return false;
    }
    let mut m = set;
    while m != 0 {
        let v = m.trailing_zeros();
        m &= m - 1;
        if clique_within(adj, m & adj[v as usize], size - 1) {
            return true;
        }
    }
    false
}

/// Edges in graph6 bit order: column by column of the upper triangle.
fn graph_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

struct GraphWalk<'a> {
    t: Option<usize>,
    edges: &'a [(usize, usize)],
    adj: Vec<u32>,
}

impl GraphWalk<'_> {
    fn allowed(&self, i: usize, j: usize) -> bool {
        self.t.is_none_or(|t| !clique_within(&self.adj, self.adj[i] & self.adj[j], t - 2))
    }

    fn toggle(&mut self, i: usize, j: usize) {
        self.adj[i] ^= 1 << j;
        self.adj[j] ^= 1 << i;
    }

    /// Applies the first `p` decisions from `bits`; false if one is forbidden.
    fn seed(&mut self, bits: u32, p: usize) -> bool {
        for idx in 0..p {
            if bits >> idx & 1 == 1 {
                let (i, j) = self.edges[idx];
                if !self.allowed(i, j) {
                    return false;
                }
                self.toggle(i, j);
            }
        }
        true
    }

    fn dfs<F: FnMut(&[u32])>(&mut self, idx: usize, leaf: &mut F) {
        if idx == self.edges.len() {
            leaf(&self.adj);
            return;
        }
        self.dfs(idx + 1, leaf);
        let (i, j) = self.edges[idx];
        if self.allowed(i, j) {
            self.toggle(i, j);
            self.dfs(idx + 1, leaf);
            self.toggle(i, j);
        }
    }
}

fn scan_graphs<A, M, L>(n: usize, t: Option<usize>, make: M, leaf: L) -> Vec<A>
where
    A: Send,
    M: Fn() -> A + Sync,
    L: Fn(&mut A, &[u32]) + Sync,
{
    let edges = graph_edges(n);
    let p = PREFIX_EDGES.min(edges.len());
    (0..1u32 << p)
        .into_par_iter()
        .map(|bits| {
            let mut acc = make();
            let mut w = GraphWalk { t, edges: &edges, adj: vec![0; n] };
            if w.seed(bits, p) {
                w.dfs(p, &mut |adj: &[u32]| leaf(&mut acc, adj));
            }
            acc
        })
        .collect()
}

pub(crate) fn graph_census(n: usize, t: Option<usize>) -> Census {
    scan_graphs(
        n,
        t,
        || (Census::new(n, 2, t), vec![0u64; n + 1]),
        |(c, hist), adj| {
            small_histogram(adj, hist);
            c.record(hist);
        },
    )
    .into_iter()
    .map(|(c, _)| c)
    .fold(Census::new(n, 2, t), Census::merge)
}

pub(crate) fn graph_witnesses(n: usize, t: Option<usize>, k: Option<usize>, target: u64, cap: usize) -> Vec<String> {
    scan_graphs(
        n,
        t,
        || (Witnesses { set: BTreeSet::new(), cap }, vec![0u64; n + 1]),
        |(w, hist), adj| {
            small_histogram(adj, hist);
            if objective(hist, k) == target {
                let g = Graph::from_adjacency(adj.iter().map(|&m| mask_set(m)).collect())
                    .expect("scan adjacency is symmetric");
                w.insert(canonical_form(&g).expect("scan sizes are within the canonical cap"));
            }
        },
    )
    .into_iter()
    .map(|(w, _)| w)
    .fold(Witnesses { set: BTreeSet::new(), cap }, Witnesses::merge)
    .set
    .into_iter()
    .collect()
}

// ---------------------------------------------------------------------------
// 3-graphs

struct HyperWalk<'a> {
    n: usize,
    t: Option<usize>,
    triples: &'a [u8],
    index: &'a [usize; 64],
    present: u32,
    stack: Vec<u8>,
}

impl HyperWalk<'_> {
    fn has(&self, tri: u8) -> bool {
        self.present >> self.index[tri as usize] & 1 == 1
    }

    /// Whether adding `tri` completes `K_t^3` together with present triples.
    fn completes(&self, tri: u8, t: usize) -> bool {
        let others = ((1u32 << self.n) - 1) as u8 & !tri;
        let mut w = others;
        loop {
            if w.count_ones() as usize == t - 3 {
                let s = tri | w;
                let full = self.triples.iter().all(|&e| e & !s != 0 || e == tri || self.has(e));
                if full {
                    return true;
                }
            }
            if w == 0 {
                return false;
            }
            w = (w - 1) & others;
        }
    }

    fn allowed(&self, tri: u8) -> bool {
        self.t.is_none_or(|t| !self.completes(tri, t))
    }

    fn push(&mut self, idx: usize) {
        self.present |= 1 << idx;
        self.stack.push(self.triples[idx]);
    }

    fn pop(&mut self, idx: usize) {
        self.present &= !(1 << idx);
        self.stack.pop();
    }

    fn seed(&mut self, bits: u32, p: usize) -> bool {
        for idx in 0..p {
            if bits >> idx & 1 == 1 {
                if !self.allowed(self.triples[idx]) {
                    return false;
                }
                self.push(idx);
            }
        }
        true
    }

    fn dfs<F: FnMut(&[u8])>(&mut self, idx: usize, leaf: &mut F) {
        if idx == self.triples.len() {
            leaf(&self.stack);
            return;
        }
        self.dfs(idx + 1, leaf);
        if self.allowed(self.triples[idx]) {
            self.push(idx);
            self.dfs(idx + 1, leaf);
            self.pop(idx);
        }
    }
}

/// Size histogram of maximal independent sets of a hypergraph on at most
/// six vertices with edges given as vertex masks.
pub(crate) fn small_hyper_histogram(n: usize, edges: &[u8], hist: &mut [u64]) {
    hist.iter_mut().for_each(|h| *h = 0);
    let mut indep = [false; 64];
    indep[0] = true;
    for s in 1..1usize << n {
        let bit = 1usize << (usize::BITS - 1 - s.leading_zeros());
        indep[s] = indep[s ^ bit] && !edges.iter().any(|&e| e as usize & bit != 0 && e as usize & !s == 0);
    }
    for s in 0..1usize << n {
        if indep[s] && (0..n).all(|w| s >> w & 1 == 1 || !indep[s | 1 << w]) {
            hist[s.count_ones() as usize] += 1;
        }
    }
}

fn triples(n: usize) -> (Vec<u8>, [usize; 64]) {
    let mut list = Vec::new();
    let mut index = [usize::MAX; 64];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let m = (1u8 << a) | (1 << b) | (1 << c);
                index[m as usize] = list.len();
                list.push(m);
            }
        }
    }
    (list, index)
}

fn scan_hypergraphs<A, M, L>(n: usize, t: Option<usize>, make: M, leaf: L) -> Vec<A>
where
    A: Send,
    M: Fn() -> A + Sync,
    L: Fn(&mut A, &[u8]) + Sync,
{
    let (list, index) = triples(n);
    let p = PREFIX_EDGES.min(list.len());
    (0..1u32 << p)
        .into_par_iter()
        .map(|bits| {
            let mut acc = make();
            let mut w = HyperWalk { n, t, triples: &list, index: &index, present: 0, stack: Vec::new() };
            if w.seed(bits, p) {
                w.dfs(p, &mut |edges: &[u8]| leaf(&mut acc, edges));
            }
            acc
        })
        .collect()
}

pub(crate) fn hyper_census(n: usize, t: Option<usize>) -> Census {
    scan_hypergraphs(
        n,
        t,
        || (Census::new(n, 3, t), vec![0u64; n + 1]),
        |(c, hist), edges| {
            small_hyper_histogram(n, edges, hist);
            c.record(hist);
        },
    )
    .into_iter()
    .map(|(c, _)| c)
    .fold(Census::new(n, 3, t), Census::merge)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically least sorted edge-mask list over all relabellings,
/// rendered as hypergraph JSON.
pub(crate) fn hyper_canonical(n: usize, edges: &[u8], perms: &[Vec<usize>]) -> String {
    let best = perms
        .iter()
        .map(|p| {
            let mut key: Vec<u8> = edges
                .iter()
                .map(|&e| (0..n).filter(|&v| e >> v & 1 == 1).fold(0u8, |m, v| m | 1 << p[v]))
                .collect();
            key.sort_unstable();
            key
        })
        .min()
        .unwrap_or_default();
    let sets = best.iter().map(|&m| mask_set(m as u32));
    let h = Hypergraph::new(n, sets).expect("relabelled edges stay distinct");
    serde_json::to_string(&h.to_json()).expect("hypergraph JSON serializes")
}

pub(crate) fn hyper_witnesses(n: usize, t: Option<usize>, k: Option<usize>, target: u64, cap: usize) -> Vec<String> {
    let perms = permutations(n);
    scan_hypergraphs(
        n,
        t,
        || (Witnesses { set: BTreeSet::new(), cap }, vec![0u64; n + 1]),
        |(w, hist), edges| {
            small_hyper_histogram(n, edges, hist);
            if objective(hist, k) == target {
                w.insert(hyper_canonical(n, edges, &perms));
            }
        },
    )
    .into_iter()
    .map(|(w, _)| w)
    .fold(Witnesses { set: BTreeSet::new(), cap }, Witnesses::merge)
    .set
    .into_iter()
    .collect()
}
