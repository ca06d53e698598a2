//! Hypergraphs on `0..n` with edges stored as vertex bitsets.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// A hypergraph whose edges are distinct vertex sets of size at least two.
///
/// Edge order is preserved from construction; edge indices are stable and
/// are what [`FractionalMatching`](crate::FractionalMatching) weights refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return input(format!("{n} vertices exceeds the cap of {MAX_VERTICES}"));
        }
        let all = VertexSet::full(n);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for e in edges {
            if e.len() < 2 {
                return input(format!("edge {e:?} has fewer than two vertices"));
            }
            if !e.is_subset(&all) {
                return input(format!("edge {e:?} is not contained in 0..{n}"));
            }
            if !seen.insert(e) {
                return input(format!("duplicate edge {e:?}"));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn from_lists(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return input(format!("edge vertex {v} out of range for n={n}"));
            }
            let s: VertexSet = e.iter().copied().collect();
            if s.len() != e.len() {
                return input(format!("edge {e:?} repeats a vertex"));
            }
            sets.push(s);
        }
        Self::new(n, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Indices of the edges containing `x`.
    pub fn incident(&self, x: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].contains(x)).collect()
    }

    /// `Some(r)` when every edge has exactly `r` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// Graph with `xy` an edge iff some hyperedge contains both endpoints.
    pub fn shadow(&self) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for e in &self.edges {
            for x in e {
                adj[x] = adj[x].union(e);
            }
        }
        for (x, row) in adj.iter_mut().enumerate() {
            row.remove(x);
        }
        Graph::from_adjacency(adj).expect("shadow adjacency is symmetric by construction")
    }

    /// `s` contains no edge.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(s))
    }

    /// `s` is independent and adding any outside vertex completes an edge.
    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        if !s.is_subset(&VertexSet::full(self.n)) || !self.is_independent(s) {
            return false;
        }
        VertexSet::full(self.n).difference(s).iter().all(|w| {
            let mut ext = *s;
            ext.insert(w);
            self.edges.iter().any(|e| e.contains(w) && e.is_subset(&ext))
        })
    }

    /// Whether some `t`-set has all of its `r`-subsets as edges (a copy of `K^r_t`).
    ///
    /// Exhaustive over `t`-subsets; intended for desk-scale hypergraphs.
    pub fn has_complete(&self, r: usize, t: usize) -> bool {
        if t < r || t > self.n {
            return false;
        }
        let edge_set: HashSet<VertexSet> = self.edges.iter().copied().filter(|e| e.len() == r).collect();
        let mut hit = false;
        for_each_subset(self.n, t, &mut |s| {
            if !hit && subsets_all_edges(s, r, &edge_set) {
                hit = true;
            }
        });
        hit
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson { n: self.n, edges: self.edges.iter().map(VertexSet::to_vec).collect() }
    }

    pub fn from_json(j: &HypergraphJson) -> Result<Self> {
        Self::from_lists(j.n, &j.edges)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let j: HypergraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

fn subsets_all_edges(s: &[usize], r: usize, edges: &HashSet<VertexSet>) -> bool {
    let mut ok = true;
    for_each_subset(s.len(), r, &mut |idx| {
        if ok {
            let e: VertexSet = idx.iter().map(|&i| s[i]).collect();
            ok = edges.contains(&e);
        }
    });
    ok
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for v in start..=n.saturating_sub(need) {
            if v >= n {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// JSON shape `{"n": int, "edges": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}
