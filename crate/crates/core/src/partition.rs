//! Graphs carrying an ordered vertex partition.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// A graph together with an ordered partition of its vertices into
/// nonempty, pairwise disjoint parts.
///
/// Transversal semantics (one vertex per part) are relative to this
/// partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    graph: Graph,
    parts: Vec<VertexSet>,
    part_of: Vec<usize>,
}

impl PartitionedGraph {
    pub fn new(graph: Graph, parts: Vec<VertexSet>) -> Result<Self> {
        let mut part_of = vec![usize::MAX; graph.n()];
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return input(format!("part {i} is empty"));
            }
            for v in p {
                if v >= graph.n() {
                    return input(format!("part {i} contains vertex {v} outside 0..{}", graph.n()));
                }
                if part_of[v] != usize::MAX {
                    return input(format!("vertex {v} lies in parts {} and {i}", part_of[v]));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return input(format!("vertex {v} is not covered by any part"));
        }
        Ok(PartitionedGraph { graph, parts, part_of })
    }

    /// Parts given as consecutive blocks of the listed sizes.
    pub fn with_block_sizes(graph: Graph, sizes: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            parts.push((next..next + s).collect());
            next += s;
        }
        Self::new(graph, parts)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// First edge with both endpoints in one part, if any.
    pub fn intra_part_edge(&self) -> Option<(usize, usize)> {
        self.graph.edges().find(|&(u, v)| self.part_of[u] == self.part_of[v])
    }

    /// The `r`-partite complement: `u ~ v` iff they lie in different parts
    /// and are non-adjacent in `self`.
    ///
    /// An involution on graphs without intra-part edges.
    pub fn partite_complement(&self) -> Result<PartitionedGraph> {
        if let Some((u, v)) = self.intra_part_edge() {
            return input(format!("edge ({u},{v}) lies inside part {}", self.part_of[u]));
        }
        let all = self.graph.vertices();
        let adj = (0..self.graph.n())
            .map(|v| {
                all.difference(&self.parts[self.part_of[v]]).difference(self.graph.neighbors(v))
            })
            .collect();
        Ok(PartitionedGraph {
            graph: Graph::from_adjacency(adj)?,
            parts: self.parts.clone(),
            part_of: self.part_of.clone(),
        })
    }

    /// Whether `s` has exactly one vertex in every part.
    pub fn is_transversal(&self, s: &VertexSet) -> bool {
        s.len() == self.parts.len() && self.parts.iter().all(|p| p.intersection(s).len() == 1)
    }

    pub fn parts_json(&self) -> PartsJson {
        PartsJson { parts: self.parts.iter().map(VertexSet::to_vec).collect() }
    }

    pub fn from_parts_json(graph: Graph, j: &PartsJson) -> Result<Self> {
        let mut parts = Vec::with_capacity(j.parts.len());
        for p in &j.parts {
            if let Some(&v) = p.iter().find(|&&v| v >= graph.n()) {
                return input(format!("part vertex {v} out of range for n={}", graph.n()));
            }
            parts.push(p.iter().copied().collect());
        }
        Self::new(graph, parts)
    }

    pub fn parse_parts(graph: Graph, text: &str) -> Result<Self> {
        let j: PartsJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_parts_json(graph, &j)
    }
}

/// JSON shape `{"parts": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartsJson {
    pub parts: Vec<Vec<usize>>,
}
