//! Undirected simple graphs over bitset adjacency.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{input, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; all neighbor bits are `< n`.
/// Instances are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return input(format!("{n} vertices exceeds the cap of {MAX_VERTICES}"));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = VertexSet::full(n);
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all;
            row.remove(v);
        }
        Ok(g)
    }

    /// Build from neighbor sets, validating symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return input(format!("{n} vertices exceeds the cap of {MAX_VERTICES}"));
        }
        let all = VertexSet::full(n);
        for (u, row) in adj.iter().enumerate() {
            if !row.is_subset(&all) {
                return input(format!("vertex {u} has a neighbor outside 0..{n}"));
            }
            if row.contains(u) {
                return input(format!("self-loop at vertex {u}"));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return input(format!("asymmetric adjacency between {u} and {v}"));
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return input(format!("edge ({u},{v}) out of range for n={}", self.n));
        }
        if u == v {
            return input(format!("self-loop at vertex {u}"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Closed neighborhood `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(*s, |acc, v| acc.union(&self.adj[v]))
    }

    fn check_range(&self, s: &VertexSet) -> Result<()> {
        if !s.is_subset(&self.vertices()) {
            return input(format!("vertex set {s:?} is not contained in 0..{}", self.n));
        }
        Ok(())
    }

    /// True iff no two members of `s` are adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_range(s)?;
        Ok(self.independent_unchecked(s))
    }

    pub(crate) fn independent_unchecked(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// True iff `s` is independent and dominates every vertex outside it.
    pub fn is_maximal_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_range(s)?;
        Ok(self.maximal_independent_unchecked(s))
    }

    pub(crate) fn maximal_independent_unchecked(&self, s: &VertexSet) -> bool {
        self.independent_unchecked(s) && self.closed_neighborhood(s) == self.vertices()
    }

    /// Whether the graph contains `t` pairwise adjacent vertices.
    ///
    /// Branch and bound over candidate sets; a greedy coloring of the
    /// candidates bounds the clique that can still be added.
    pub fn has_clique(&self, t: usize) -> bool {
        if t == 0 {
            return true;
        }
        if t > self.n {
            return false;
        }
        if t == 1 {
            return self.n > 0;
        }
        self.clique_search(0, self.vertices(), t)
    }

    fn clique_search(&self, size: usize, cand: VertexSet, t: usize) -> bool {
        if size == t {
            return true;
        }
        if size + cand.len() < t || size + self.greedy_color_bound(&cand) < t {
            return false;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            if size + cand.len() < t {
                return false;
            }
            if self.clique_search(size + 1, cand.intersection(&self.adj[v]), t) {
                return true;
            }
            cand.remove(v);
        }
        false
    }

    /// Number of color classes in a greedy sequential coloring of `cand`.
    fn greedy_color_bound(&self, cand: &VertexSet) -> usize {
        let mut left = *cand;
        let mut colors = 0;
        while !left.is_empty() {
            colors += 1;
            let mut avail = left;
            while let Some(v) = avail.first() {
                left.remove(v);
                avail.remove(v);
                avail = avail.difference(&self.adj[v]);
            }
        }
        colors
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(&self.adj[v]))
    }

    /// Subgraph induced on `keep`, relabelled `0..keep.len()` in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Graph> {
        self.check_range(keep)?;
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|u| index[u]).collect())
            .collect();
        Ok(Graph { n: order.len(), adj })
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return input("permutation length differs from vertex count");
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return input("not a permutation");
            }
            seen.insert(p);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (v, row) in self.adj.iter().enumerate() {
            adj[perm[v]] = row.iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { n: self.n, adj })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Vertex-disjoint union; the vertices of `gs[i]` follow those of `gs[i-1]`.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let total: usize = gs.iter().map(Graph::n).sum();
    let mut out = Graph::empty(total)?;
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            out.add_edge(u + offset, v + offset)?;
        }
        offset += g.n();
    }
    Ok(out)
}
