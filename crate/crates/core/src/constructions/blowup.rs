//! Hypergraph blowups with per-edge gadgets.
//!
//! Given a template hypergraph on `0..k` and, for every edge `e` of size
//! `r`, an `r`-partite gadget `G_e` with parts `U_{e,0}, .., U_{e,r-1}`, the
//! blowup has one part `V_x` per template vertex. A vertex of `V_x` is a
//! function assigning to each edge `e ∋ x` a vertex of `U_{e,i}`, where `x`
//! is the `i`-th smallest vertex of `e`. Two functions `f ∈ V_x`, `g ∈ V_y`
//! are adjacent iff some edge `e ∋ x, y` has `f(e) ~ g(e)` in `G_e`.
//!
//! Vertices of `V_x` are numbered in mixed radix over the incident edges in
//! ascending edge index, the first edge being the most significant digit;
//! each digit is the rank of `f(e)` within `U_{e,i}`. A template vertex with
//! no incident edge yields a one-vertex part.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::constructions::{comatching, gadget, rs_packing, tight_cycle, trivial_packing};
use crate::engine::enumerate_transversal_mis;
use crate::error::{input, Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::hypergraph::{Hypergraph, HypergraphJson};
use crate::matching::FractionalMatching;
use crate::partition::PartitionedGraph;

/// Where an edge's gadget comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetSource {
    /// Comatching on two parts; only for 2-edges.
    Comatching,
    /// Partite complement of disjoint transversal cliques; any size.
    Trivial,
    /// Partite complement of the progression-free triangle packing; only for 3-edges.
    Rs,
}

/// One source for the whole template, or one per edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GadgetChoice {
    Uniform(GadgetSource),
    PerEdge(Vec<GadgetSource>),
}

impl Default for GadgetChoice {
    fn default() -> Self {
        GadgetChoice::Uniform(GadgetSource::Trivial)
    }
}

/// Gadget for an `r`-edge with parameter `s` (part size for comatching and
/// trivial gadgets; the packing parameter `m` for `Rs`).
pub fn build_gadget(source: GadgetSource, r: usize, s: usize) -> Result<PartitionedGraph> {
    if s == 0 {
        return input("gadget size must be positive");
    }
    match (source, r) {
        (GadgetSource::Comatching | GadgetSource::Trivial, 2) => comatching(2 * s),
        (GadgetSource::Trivial, r) if r >= 3 => gadget(&trivial_packing(r, s)?),
        (GadgetSource::Rs, 3) => gadget(&rs_packing(s)?),
        (src, r) => input(format!("gadget source {src:?} does not apply to {r}-edges")),
    }
}

/// Template, per-edge sizes `s_e` and per-edge gadget sources.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub template: Hypergraph,
    pub sizes: Vec<usize>,
    pub gadgets: Vec<GadgetSource>,
}

impl BlowupSpec {
    /// A uniform choice maps 2-edges to comatchings and applies the named
    /// source to every larger edge. A per-edge list is taken literally.
    pub fn new(template: Hypergraph, sizes: Vec<usize>, choice: &GadgetChoice) -> Result<Self> {
        let m = template.edges().len();
        if sizes.len() != m {
            return input(format!("{} sizes given for {m} edges", sizes.len()));
        }
        if let Some(e) = sizes.iter().position(|&s| s == 0) {
            return input(format!("edge {e} has size 0"));
        }
        let gadgets = match choice {
            GadgetChoice::Uniform(src) => template
                .edges()
                .iter()
                .map(|e| if e.len() == 2 { GadgetSource::Comatching } else { *src })
                .collect(),
            GadgetChoice::PerEdge(list) => {
                if list.len() != m {
                    return input(format!("{} gadget sources given for {m} edges", list.len()));
                }
                list.clone()
            }
        };
        for (e, (edge, src)) in template.edges().iter().zip(&gadgets).enumerate() {
            let ok = matches!(
                (src, edge.len()),
                (GadgetSource::Comatching, 2) | (GadgetSource::Trivial, _) | (GadgetSource::Rs, 3)
            );
            if !ok {
                return input(format!("gadget source {src:?} does not apply to edge {e} of size {}", edge.len()));
            }
        }
        Ok(BlowupSpec { template, sizes, gadgets })
    }

    pub fn uniform(template: Hypergraph, s: usize, choice: &GadgetChoice) -> Result<Self> {
        let m = template.edges().len();
        Self::new(template, vec![s; m], choice)
    }

    /// Sizes `s_e = ⌊n^{M(e)}⌋`, computed exactly through integer roots.
    pub fn from_matching(
        template: Hypergraph,
        matching: &FractionalMatching,
        n: u64,
        choice: &GadgetChoice,
    ) -> Result<Self> {
        if n == 0 {
            return input("n must be positive");
        }
        if !matching.validate(&template)? {
            return input("weights exceed load one at some vertex");
        }
        let sizes = (0..template.edges().len())
            .map(|e| {
                let w = matching.weight(e);
                let p = u32::try_from(*w.numer()).map_err(|_| Error::Input("weight numerator too large".into()))?;
                let q = u32::try_from(*w.denom()).map_err(|_| Error::Input("weight denominator too large".into()))?;
                let power = (n as u128)
                    .checked_pow(p)
                    .ok_or_else(|| Error::Input(format!("n^{p} overflows")))?;
                usize::try_from(integer_root(power, q)).map_err(|_| Error::Input("part size overflows".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        for x in 0..template.n() {
            let prod = template.incident(x).iter().try_fold(1u128, |acc, &e| acc.checked_mul(sizes[e] as u128));
            if prod.is_none_or(|p| p > n as u128) {
                return input(format!("part sizes at vertex {x} multiply past n"));
            }
        }
        Self::new(template, sizes, choice)
    }

    pub fn to_json(&self) -> BlowupSpecJson {
        let gadget = match self.gadgets.first() {
            Some(g) if self.gadgets.iter().all(|h| h == g) => GadgetChoice::Uniform(*g),
            _ => GadgetChoice::PerEdge(self.gadgets.clone()),
        };
        BlowupSpecJson { template: self.template.to_json(), sizes: self.sizes.clone(), gadget }
    }

    pub fn from_json(j: &BlowupSpecJson) -> Result<Self> {
        Self::new(Hypergraph::from_json(&j.template)?, j.sizes.clone(), &j.gadget)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let j: BlowupSpecJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

/// JSON shape `{"template": {..}, "sizes": [..], "gadget": "comatching"|"trivial"|"rs"|[..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpecJson {
    pub template: HypergraphJson,
    pub sizes: Vec<usize>,
    #[serde(default)]
    pub gadget: GadgetChoice,
}

/// `⌊x^{1/q}⌋`.
fn integer_root(x: u128, q: u32) -> u128 {
    if q <= 1 || x <= 1 {
        return x;
    }
    let (mut lo, mut hi) = (0u128, 1u128 << (128 / q + 1).min(127));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match mid.checked_pow(q) {
            Some(p) if p <= x => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

/// A built blowup together with the data needed to name its vertices.
#[derive(Clone, Debug)]
pub struct Blowup {
    graph: PartitionedGraph,
    gadgets: Vec<PartitionedGraph>,
    /// Incident edge indices per template vertex, ascending.
    incident: Vec<Vec<usize>>,
    /// Position of `x` inside each incident edge.
    rank: Vec<Vec<usize>>,
    /// Gadget vertex chosen on each incident edge, per blowup vertex.
    func: Vec<Vec<usize>>,
    offsets: Vec<usize>,
}

/// Build `G[H, sizes]` from a spec.
pub fn blowup(spec: &BlowupSpec) -> Result<Blowup> {
    let h = &spec.template;
    let mut cache: HashMap<(GadgetSource, usize, usize), PartitionedGraph> = HashMap::new();
    let mut gadgets = Vec::with_capacity(h.edges().len());
    for (e, edge) in h.edges().iter().enumerate() {
        let key = (spec.gadgets[e], edge.len(), spec.sizes[e]);
        if !cache.contains_key(&key) {
            cache.insert(key, build_gadget(key.0, key.1, key.2)?);
        }
        gadgets.push(cache[&key].clone());
    }

    let k = h.n();
    let incident: Vec<Vec<usize>> = (0..k).map(|x| h.incident(x)).collect();
    let rank: Vec<Vec<usize>> = (0..k)
        .map(|x| incident[x].iter().map(|&e| h.edges()[e].iter().position(|v| v == x).unwrap()).collect())
        .collect();
    let domains: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|x| {
            incident[x].iter().zip(&rank[x]).map(|(&e, &i)| gadgets[e].parts()[i].to_vec()).collect()
        })
        .collect();

    let mut sizes = Vec::with_capacity(k);
    for (x, dom) in domains.iter().enumerate() {
        let size = dom
            .iter()
            .try_fold(1usize, |acc, d| acc.checked_mul(d.len()))
            .filter(|&s| s <= MAX_VERTICES)
            .ok_or_else(|| Error::Cap(format!("part {x} exceeds {MAX_VERTICES} vertices")))?;
        sizes.push(size);
    }
    let total: usize = sizes.iter().sum();
    if total > MAX_VERTICES {
        return Err(Error::Cap(format!("blowup has {total} vertices, cap is {MAX_VERTICES}")));
    }

    let mut offsets = Vec::with_capacity(k + 1);
    let mut func = Vec::with_capacity(total);
    let mut owner = Vec::with_capacity(total);
    offsets.push(0);
    for (x, dom) in domains.iter().enumerate() {
        for idx in 0..sizes[x] {
            // Decode mixed radix, most significant digit first.
            let mut rest = idx;
            let mut digits = vec![0; dom.len()];
            for j in (0..dom.len()).rev() {
                digits[j] = rest % dom[j].len();
                rest /= dom[j].len();
            }
            func.push(digits.iter().zip(dom).map(|(&d, u)| u[d]).collect::<Vec<_>>());
            owner.push(x);
        }
        offsets.push(offsets[x] + sizes[x]);
    }

    let mut adj = vec![VertexSet::EMPTY; total];
    for x in 0..k {
        for y in x + 1..k {
            let shared: Vec<(usize, usize, usize)> = incident[x]
                .iter()
                .enumerate()
                .filter_map(|(jx, e)| incident[y].iter().position(|f| f == e).map(|jy| (*e, jx, jy)))
                .collect();
            if shared.is_empty() {
                continue;
            }
            for f in offsets[x]..offsets[x + 1] {
                for g in offsets[y]..offsets[y + 1] {
                    if shared.iter().any(|&(e, jx, jy)| gadgets[e].graph().has_edge(func[f][jx], func[g][jy])) {
                        adj[f].insert(g);
                        adj[g].insert(f);
                    }
                }
            }
        }
    }
    let parts = (0..k).map(|x| (offsets[x]..offsets[x + 1]).collect()).collect();
    let graph = PartitionedGraph::new(Graph::from_adjacency(adj)?, parts)?;
    debug_assert_eq!(owner.len(), total);
    Ok(Blowup { graph, gadgets, incident, rank, func, offsets })
}

impl Blowup {
    pub fn partitioned(&self) -> &PartitionedGraph {
        &self.graph
    }

    pub fn graph(&self) -> &Graph {
        self.graph.graph()
    }

    pub fn into_partitioned(self) -> PartitionedGraph {
        self.graph
    }

    pub fn gadget(&self, e: usize) -> &PartitionedGraph {
        &self.gadgets[e]
    }

    pub fn num_edges(&self) -> usize {
        self.gadgets.len()
    }

    /// The gadget vertices `f(e)` for blowup vertex `v`, in incident-edge order.
    pub fn function(&self, v: usize) -> &[usize] {
        &self.func[v]
    }

    /// Blowup vertex in `V_x` whose function picks `assignment[j]` on the
    /// `j`-th incident edge of `x`.
    pub fn vertex(&self, x: usize, assignment: &[usize]) -> Option<usize> {
        (self.offsets[x]..self.offsets[x + 1]).find(|&v| self.func[v] == assignment)
    }

    /// Transversal MIS's of every gadget, in enumeration order.
    pub fn gadget_transversals(&self) -> Vec<Vec<VertexSet>> {
        self.gadgets
            .iter()
            .map(|g| {
                let mut out = Vec::new();
                enumerate_transversal_mis(g, |s| {
                    out.push(*s);
                    ControlFlow::Continue(())
                });
                out
            })
            .collect()
    }

    /// Product over edges of the gadget transversal counts: the size of the
    /// family of MIS's produced by [`Blowup::family_member`].
    pub fn family_size(&self) -> u128 {
        self.gadget_transversals().iter().map(|t| t.len() as u128).product()
    }

    /// The set `I_F` for a choice `F(e)` of one transversal MIS per gadget:
    /// in each `V_x` the function agreeing with `F` on every incident edge.
    pub fn family_member(&self, selection: &[VertexSet]) -> Result<VertexSet> {
        if selection.len() != self.gadgets.len() {
            return input(format!("{} selections for {} edges", selection.len(), self.gadgets.len()));
        }
        for (e, s) in selection.iter().enumerate() {
            if !self.gadgets[e].is_transversal(s) {
                return input(format!("selection for edge {e} is not transversal"));
            }
        }
        let mut out = VertexSet::EMPTY;
        for x in 0..self.incident.len() {
            let assignment: Vec<usize> = self.incident[x]
                .iter()
                .zip(&self.rank[x])
                .map(|(&e, &i)| {
                    selection[e].intersection(&self.gadgets[e].parts()[i]).first().expect("transversal")
                })
                .collect();
            out.insert(self.vertex(x, &assignment).expect("every assignment names a vertex"));
        }
        Ok(out)
    }
}

fn gadget_block(r: usize, m: usize) -> Result<PartitionedGraph> {
    build_gadget(if r == 2 { GadgetSource::Comatching } else { GadgetSource::Trivial }, r, m)
}

/// `q = ⌊k/(t-1)⌋` disjoint gadgets on `t-1` parts of size `m`, followed by
/// a gadget on `s = k mod (t-1)` parts (`s >= 2`) or an isolated vertex
/// (`s = 1`). The result has `k` parts and is `K_t`-free.
pub fn theorem_a_construction(k: usize, t: usize, m: usize) -> Result<PartitionedGraph> {
    if k < 1 || t < 3 || m < 1 {
        return input(format!("need k >= 1, t >= 3, m >= 1; got k={k}, t={t}, m={m}"));
    }
    let (q, s) = (k / (t - 1), k % (t - 1));
    let mut blocks = Vec::with_capacity(q + 1);
    for _ in 0..q {
        blocks.push(gadget_block(t - 1, m)?);
    }
    match s {
        0 => {}
        1 => blocks.push(PartitionedGraph::with_block_sizes(Graph::empty(1)?, &[1])?),
        s => blocks.push(gadget_block(s, m)?),
    }
    let graphs: Vec<Graph> = blocks.iter().map(|b| b.graph().clone()).collect();
    let union = disjoint_union(&graphs)?;
    let mut parts = Vec::with_capacity(k);
    let mut offset = 0;
    for b in &blocks {
        for p in b.parts() {
            parts.push(p.iter().map(|v| v + offset).collect());
        }
        offset += b.graph().n();
    }
    PartitionedGraph::new(union, parts)
}

/// Blowup of the `(t-1)`-uniform tight cycle on `k >= 2(t-1)` vertices with
/// every part size `m`; `K_t`-free.
pub fn theorem_b_construction(k: usize, t: usize, m: usize) -> Result<Blowup> {
    if t < 3 || k < 2 * (t - 1) || m < 1 {
        return input(format!("need t >= 3, k >= 2(t-1), m >= 1; got k={k}, t={t}, m={m}"));
    }
    let spec = BlowupSpec::uniform(tight_cycle(t - 1, k)?, m, &GadgetChoice::default())?;
    blowup(&spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::Weight;

    #[test]
    fn integer_roots() {
        assert_eq!(integer_root(16, 2), 4);
        assert_eq!(integer_root(17, 2), 4);
        assert_eq!(integer_root(15, 2), 3);
        assert_eq!(integer_root(1000, 3), 10);
        assert_eq!(integer_root(999, 3), 9);
        assert_eq!(integer_root(u128::MAX, 2), u64::MAX as u128);
        assert_eq!(integer_root(7, 1), 7);
    }

    #[test]
    fn sizes_from_half_weights_on_c5() {
        let c5 = tight_cycle(2, 5).unwrap();
        let m = FractionalMatching::uniform(5, Weight::new(1, 2));
        let spec = BlowupSpec::from_matching(c5.clone(), &m, 9, &GadgetChoice::default()).unwrap();
        assert_eq!(spec.sizes, vec![3; 5]);
        let spec = BlowupSpec::from_matching(c5, &m, 8, &GadgetChoice::default()).unwrap();
        assert_eq!(spec.sizes, vec![2; 5]);
    }

    #[test]
    fn overloaded_matching_rejected() {
        let tc = tight_cycle(3, 6).unwrap();
        let m = FractionalMatching::uniform(6, Weight::new(1, 2));
        assert!(BlowupSpec::from_matching(tc, &m, 4, &GadgetChoice::default()).is_err());
    }

    #[test]
    fn gadget_source_rules() {
        let tc = tight_cycle(3, 6).unwrap();
        assert!(BlowupSpec::uniform(tc.clone(), 2, &GadgetChoice::Uniform(GadgetSource::Comatching)).is_err());
        assert!(BlowupSpec::uniform(tc.clone(), 2, &GadgetChoice::Uniform(GadgetSource::Rs)).is_ok());
        let tc4 = tight_cycle(4, 8).unwrap();
        assert!(BlowupSpec::uniform(tc4, 2, &GadgetChoice::Uniform(GadgetSource::Rs)).is_err());
        assert!(BlowupSpec::new(tc, vec![2; 5], &GadgetChoice::default()).is_err());
    }

    #[test]
    fn isolated_template_vertex_is_a_singleton_part() {
        let h = Hypergraph::from_lists(3, &[vec![0, 1]]).unwrap();
        let b = blowup(&BlowupSpec::uniform(h, 2, &GadgetChoice::default()).unwrap()).unwrap();
        let sizes: Vec<_> = b.partitioned().parts().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![2, 2, 1]);
        assert_eq!(b.graph().degree(4), 0);
    }

    #[test]
    fn single_edge_blowup_is_its_gadget() {
        let h = Hypergraph::from_lists(2, &[vec![0, 1]]).unwrap();
        let b = blowup(&BlowupSpec::uniform(h, 4, &GadgetChoice::default()).unwrap()).unwrap();
        assert_eq!(b.partitioned(), &comatching(8).unwrap());
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"template":{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]},"sizes":[2,2,2,2,2],"gadget":"comatching"}"#;
        let spec = BlowupSpec::parse_json(text).unwrap();
        assert_eq!(serde_json::to_string(&spec.to_json()).unwrap(), text);
        let per_edge = r#"{"template":{"n":3,"edges":[[0,1,2]]},"sizes":[3],"gadget":["rs"]}"#;
        assert_eq!(BlowupSpec::parse_json(per_edge).unwrap().gadgets, vec![GadgetSource::Rs]);
        assert!(BlowupSpec::parse_json(r#"{"template":{"n":2,"edges":[[0,1]]},"sizes":[1],"gadget":"bogus"}"#).is_err());
    }
}
