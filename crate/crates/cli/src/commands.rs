use std::time::Instant;

use serde::Serialize;

use mis_lab::constructions::{
    blowup, c4_leaves_graph, comatching, dominating_clique_graph, gadget, hypergraph_construction, rs_packing,
    star_hypergraph, theorem_a_construction, theorem_b_construction, tight_cycle, trivial_packing, BlowupSpec,
};
use mis_lab::engine::{
    count_all_mis, count_k_mis_parallel, count_transversal_mis, hypergraph_count_k_mis, mis_size_histogram,
    transversal_reduction,
};
use mis_lab::search::{exhaustive_m, verify_theorem, SearchSpec, VerifyRanges};
use mis_lab::{graph6, Graph, Hypergraph, PartitionedGraph, PartsJson};

use crate::cli::{ConstructArgs, Construction, CountArgs, Format, Packing, ReduceArgs, SearchArgs, VerifyArgs};
use crate::output::{csv_rows, emit, json, parse_input, read, read_graph, Ctx, Failure, Input};

fn need(v: Option<usize>, flag: &str, name: Construction) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{name:?} needs {flag}")))
}

/// Clique-freeness the construction promises, checked on the output.
struct Claim {
    t: usize,
    r: usize,
    holds: bool,
}

enum Built {
    Graph(Graph, Option<PartsJson>, Option<Claim>),
    Hyper(Hypergraph, Option<PartsJson>, Option<Claim>),
}

fn graph_claim(g: &Graph, t: usize) -> Option<Claim> {
    Some(Claim { t, r: 2, holds: !g.has_clique(t) })
}

fn partitioned(pg: PartitionedGraph, t: usize) -> Built {
    let claim = graph_claim(pg.graph(), t);
    let parts = pg.parts_json();
    Built::Graph(pg.into_graph(), Some(parts), claim)
}

/// Smallest `t` with no `K_t` in `g`.
fn clique_free_order(g: &Graph) -> usize {
    (2..).find(|&t| !g.has_clique(t)).expect("some clique size is absent")
}

fn build(a: &ConstructArgs) -> Result<Built, Failure> {
    use Construction as C;
    let name = a.name;
    Ok(match name {
        C::Comatching => partitioned(comatching(need(a.n, "--n", name)?)?, 3),
        C::Gadget => {
            let m = need(a.m, "--m", name)?;
            let r = a.r.unwrap_or(3);
            let p = match a.packing {
                Packing::Trivial => trivial_packing(r, m)?,
                Packing::Rs if r == 3 => rs_packing(m)?,
                Packing::Rs => return Err(Failure::Usage("the rs packing needs --r 3".into())),
            };
            partitioned(gadget(&p)?, r + 1)
        }
        C::TightCycle => {
            let (r, k) = (need(a.r, "--r", name)?, need(a.k, "--k", name)?);
            let h = tight_cycle(r, k)?;
            let claim = (k >= 2 * r).then(|| Claim { t: r + 1, r: 2, holds: !h.shadow().has_clique(r + 1) });
            Built::Hyper(h, None, claim)
        }
        C::Blowup => {
            let path = a.spec.as_ref().ok_or_else(|| Failure::Usage("blowup needs --spec".into()))?;
            let spec = BlowupSpec::parse_json(&read(path)?)?;
            let t = clique_free_order(&spec.template.shadow());
            partitioned(blowup(&spec)?.into_partitioned(), t)
        }
        C::TheoremA => {
            let (k, t, m) = (need(a.k, "--k", name)?, need(a.t, "--t", name)?, need(a.m, "--m", name)?);
            partitioned(theorem_a_construction(k, t, m)?, t)
        }
        C::TheoremB => {
            let (k, t, m) = (need(a.k, "--k", name)?, need(a.t, "--t", name)?, need(a.m, "--m", name)?);
            partitioned(theorem_b_construction(k, t, m)?.into_partitioned(), t)
        }
        C::Hyper => {
            let (r, k, n) = (need(a.r, "--r", name)?, need(a.k, "--k", name)?, need(a.n, "--n", name)?);
            let hc = hypergraph_construction(r, k, n)?;
            let parts = PartsJson { parts: hc.parts.iter().map(|p| p.to_vec()).collect() };
            let claim = Claim { t: r + 1, r, holds: !hc.hypergraph.has_complete(r, r + 1) };
            Built::Hyper(hc.hypergraph, Some(parts), Some(claim))
        }
        C::StarHyper => {
            let h = star_hypergraph(need(a.n, "--n", name)?)?;
            let holds = !h.has_complete(3, 4);
            Built::Hyper(h, None, Some(Claim { t: 4, r: 3, holds }))
        }
        C::Dominating => {
            let (t, n) = (need(a.t, "--t", name)?, need(a.n, "--n", name)?);
            let g = dominating_clique_graph(t, n)?;
            let claim = graph_claim(&g, t);
            Built::Graph(g, None, claim)
        }
        C::C4Leaves => {
            let g = c4_leaves_graph();
            let claim = graph_claim(&g, 3);
            Built::Graph(g, None, claim)
        }
    })
}

pub fn construct(a: &ConstructArgs) -> Result<(), Failure> {
    let built = build(a)?;
    let (text, n, edges, parts, claim) = match built {
        Built::Graph(g, parts, claim) => (graph6::encode_string(&g)? + "\n", g.n(), g.edge_count(), parts, claim),
        Built::Hyper(h, parts, claim) => (json(&h.to_json())?, h.n(), h.edges().len(), parts, claim),
    };
    emit(a.out.as_deref(), &text)?;
    if let (Some(path), Some(parts)) = (&a.parts_out, &parts) {
        emit(Some(path), &json(parts)?)?;
    }
    let check = match &claim {
        Some(c) if c.r == 2 => format!(", K_{}-free: {}", c.t, if c.holds { "yes" } else { "NO" }),
        Some(c) => format!(", K_{}^{}-free: {}", c.t, c.r, if c.holds { "yes" } else { "NO" }),
        None => String::new(),
    };
    let summary = format!("{:?}: {n} vertices, {edges} edges{check}", a.name);
    if a.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    match claim {
        Some(c) if !c.holds => Err(Failure::Violation(format!("output contains a K_{}", c.t))),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct CountResult {
    vertices: usize,
    edges: usize,
    uniformity: usize,
    k: Option<usize>,
    transversal: bool,
    count: u64,
    /// Counts by size, when no size was requested.
    histogram: Option<Vec<u64>>,
}

pub fn count(ctx: &Ctx, a: &CountArgs) -> Result<(), Failure> {
    let input = parse_input(&read(&a.graph)?)?;
    let result = match input {
        Input::Graph(g) => {
            if let Some(t) = a.forbid_clique {
                if g.has_clique(t) {
                    return Err(Failure::Violation(format!("graph contains K_{t}")));
                }
            }
            let (count, histogram) = if a.transversal {
                let path = a.parts.as_ref().expect("clap requires --parts");
                let pg = PartitionedGraph::parse_parts(g.clone(), &read(path)?)?;
                if a.k.is_some_and(|k| k != pg.num_parts()) {
                    return Err(Failure::Usage(format!("--k must equal the {} parts", pg.num_parts())));
                }
                (count_transversal_mis(&pg), None)
            } else {
                match a.k {
                    Some(k) => (count_k_mis_parallel(&g, k), None),
                    None => (count_all_mis(&g), Some(mis_size_histogram(&g))),
                }
            };
            CountResult {
                vertices: g.n(),
                edges: g.edge_count(),
                uniformity: 2,
                k: a.k,
                transversal: a.transversal,
                count,
                histogram,
            }
        }
        Input::Hyper(h) => {
            if a.transversal {
                return Err(Failure::Usage("transversal counting needs a graph6 graph".into()));
            }
            let r = h.uniformity().unwrap_or(0);
            if let Some(t) = a.forbid_clique {
                if r == 0 {
                    return Err(Failure::Usage("--forbid-clique needs a uniform hypergraph".into()));
                }
                if h.has_complete(r, t) {
                    return Err(Failure::Violation(format!("hypergraph contains K_{t}^{r}")));
                }
            }
            let (count, histogram) = match a.k {
                Some(k) => (hypergraph_count_k_mis(&h, k), None),
                None => {
                    let hist: Vec<u64> = (0..=h.n()).map(|k| hypergraph_count_k_mis(&h, k)).collect();
                    (hist.iter().sum(), Some(hist))
                }
            };
            CountResult { vertices: h.n(), edges: h.edges().len(), uniformity: r, k: a.k, transversal: false, count, histogram }
        }
    };
    let text = match a.format {
        Format::Json => json(&ctx.report("count", a, &result))?,
        Format::Csv => csv_rows(&[(result.vertices, result.edges, result.k, result.transversal, result.count)])
            .map(|body| format!("vertices,edges,k,transversal,count\n{body}"))?,
        Format::Text | Format::Graph6 => format!("{}\n", result.count),
    };
    emit(a.out.as_deref(), &text)
}

#[derive(Serialize)]
struct SearchRow {
    n: usize,
    k: Option<usize>,
    t: Option<usize>,
    r: usize,
    value: u64,
    formula_value: Option<u64>,
    graphs_scanned: u64,
    witnesses: usize,
}

pub fn search(ctx: &Ctx, a: &SearchArgs) -> Result<(), Failure> {
    let spec = SearchSpec {
        n: a.n,
        k: a.k,
        t: a.t,
        r: a.r,
        collect_witnesses: a.witnesses,
        witness_cap: a.witness_cap,
    };
    let rep = exhaustive_m(&spec)?;
    eprintln!("scanned {} structures in {:.2?}", rep.graphs_scanned, rep.elapsed);
    let text = match a.format {
        Format::Json => json(&ctx.report("search", a, &rep))?,
        Format::Csv => csv_rows(&[SearchRow {
            n: spec.n,
            k: spec.k,
            t: spec.t,
            r: spec.r,
            value: rep.value,
            formula_value: rep.formula_value,
            graphs_scanned: rep.graphs_scanned,
            witnesses: rep.witnesses.len(),
        }])?,
        Format::Graph6 => rep.witnesses.iter().map(|w| format!("{w}\n")).collect(),
        Format::Text => format!("{}\n", rep.value),
    };
    emit(a.out.as_deref(), &text)
}

pub fn verify(ctx: &Ctx, a: &VerifyArgs) -> Result<(), Failure> {
    let ranges = VerifyRanges { n: a.n.clone(), k: a.k.clone(), t: a.t.clone() };
    let table = verify_theorem(&a.theorem, &ranges)?;
    let text = match a.format {
        Format::Json => json(&ctx.report("verify", a, &table))?,
        Format::Csv => csv_rows(&table.rows)?,
        Format::Text | Format::Graph6 => table
            .rows
            .iter()
            .map(|r| {
                let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
                let mark = if r.matched { "ok" } else { "MISMATCH" };
                format!("n={} k={} t={} computed={} formula={} {mark}\n", r.n, opt(r.k), opt(r.t), r.computed, r.formula)
            })
            .collect(),
    };
    emit(a.out.as_deref(), &text)?;
    let bad = table.mismatches().count();
    if bad > 0 {
        return Err(Failure::Mismatch(format!("{bad} of {} rows differ from the closed form", table.rows.len())));
    }
    Ok(())
}

#[derive(Serialize)]
struct ReduceReport {
    source_m: u64,
    composition: Vec<usize>,
    composition_count: u64,
    achieved_t: u64,
    bound_met: bool,
    retries_used: usize,
    seed: u64,
    vertex_map: Vec<usize>,
    subgraph: String,
    parts: PartsJson,
}

pub fn reduce(ctx: &Ctx, a: &ReduceArgs) -> Result<(), Failure> {
    let g = read_graph(&a.graph)?;
    let start = Instant::now();
    let res = transversal_reduction(&g, a.k, a.retries, ctx.seed)?;
    eprintln!("reduction finished in {:.2?}", start.elapsed());
    let out = ReduceReport {
        source_m: res.source_m,
        composition: res.composition,
        composition_count: res.composition_count,
        achieved_t: res.achieved_t,
        bound_met: res.bound_met,
        retries_used: res.retries_used,
        seed: res.seed,
        vertex_map: res.vertex_map,
        subgraph: graph6::encode_string(res.subgraph.graph())?,
        parts: res.subgraph.parts_json(),
    };
    emit(a.out.as_deref(), &json(&ctx.report("reduce", a, &out))?)
}
