//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Exact integer equality everywhere unless a line says otherwise.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mis_lab::constructions::{
    behrend_set, blowup, c4_leaves_graph, comatching, gadget, rs_packing, star_hypergraph, theorem_b_construction,
    tight_cycle, BlowupSpec, GadgetChoice,
};
use mis_lab::engine::{
    count_k_mis, count_transversal_mis, hypergraph_count_k_mis, transversal_reduction, tripartite_t_bound_check,
};
use mis_lab::search::{
    canonical_form, exhaustive_m, small_k_bound_table, uniqueness_check, verify, SearchSpec, TheoremId,
    VerifyRanges,
};
use mis_lab::{Graph, Hypergraph, PartitionedGraph, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let e = start.elapsed();
    ensure(e < limit, || format!("took {e:.1?}, limit {limit:?}"))
}

// ---------------------------------------------------------------------------
// oracles

fn naive_is_mis(g: &Graph, s: u32) -> bool {
    let n = g.n();
    let inside = |v: usize| s >> v & 1 == 1;
    for u in 0..n {
        for v in u + 1..n {
            if inside(u) && inside(v) && g.has_edge(u, v) {
                return false;
            }
        }
    }
    (0..n).all(|w| inside(w) || (0..n).any(|v| inside(v) && g.has_edge(v, w)))
}

fn naive_count(g: &Graph, k: usize) -> u64 {
    (0u32..1 << g.n()).filter(|s| s.count_ones() as usize == k && naive_is_mis(g, *s)).count() as u64
}

fn naive_hyper_count(n: usize, edges: &[u32], k: usize) -> u64 {
    let indep = |s: u32| edges.iter().all(|&e| e & !s != 0);
    (0u32..1 << n)
        .filter(|&s| s.count_ones() as usize == k && indep(s) && (0..n).all(|w| s >> w & 1 == 1 || !indep(s | 1 << w)))
        .count() as u64
}

fn set_mask(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Edges offered in random order, each kept with probability `p` unless it
/// closes a triangle. `allowed` filters candidate pairs.
fn random_triangle_free(rng: &mut ChaCha8Rng, n: usize, p: f64, allowed: impl Fn(usize, usize) -> bool) -> Graph {
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| allowed(u, v)).collect();
    pairs.shuffle(rng);
    let mut adj = vec![0u32; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if adj[u] & adj[v] == 0 && rng.gen_bool(p) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn nielsen_closed_form(n: usize, k: usize) -> u64 {
    let (q, s) = ((n / k) as u64, (n % k) as u32);
    q.pow(k as u32 - s) * (q + 1).pow(s)
}

// ---------------------------------------------------------------------------
// criteria

fn moon_moser() -> Outcome {
    let start = Instant::now();
    let table = verify(TheoremId::MoonMoser, &VerifyRanges::n(2..=7)).map_err(|e| e.to_string())?;
    let got: Vec<u64> = table.rows.iter().map(|r| r.computed).collect();
    ensure(got == [2, 3, 4, 6, 9, 12], || format!("m(n), n=2..7: {got:?}"))?;
    ensure(table.all_match(), || "formula mismatch".into())?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("m(n) n=2..7 = {got:?}"))
}

fn hujter_tuza() -> Outcome {
    let start = Instant::now();
    let table = verify(TheoremId::HujterTuza, &VerifyRanges::n(4..=7)).map_err(|e| e.to_string())?;
    let got: Vec<u64> = table.rows.iter().map(|r| r.computed).collect();
    ensure(got == [4, 5, 8, 10], || format!("m3(n), n=4..7: {got:?}"))?;
    ensure(table.all_match(), || "formula mismatch".into())?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("m3(n) n=4..7 = {got:?}"))
}

fn nielsen() -> Outcome {
    let start = Instant::now();
    let table = verify(TheoremId::Nielsen, &VerifyRanges::n(3..=7).with_k(2..=6)).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for row in table.rows.iter().filter(|r| r.k.unwrap() < r.n) {
        let want = nielsen_closed_form(row.n, row.k.unwrap());
        ensure(row.computed == want, || format!("m({}, {}) = {}, expected {want}", row.n, row.k.unwrap(), row.computed))?;
        checked += 1;
    }
    ensure(checked == 15, || format!("expected 15 (n,k) pairs, checked {checked}"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checked} pairs 2 <= k < n <= 7 match"))
}

fn m3_n2() -> Outcome {
    let start = Instant::now();
    let table = verify(TheoremId::M3n2, &VerifyRanges::n(3..=7)).map_err(|e| e.to_string())?;
    let got: Vec<u64> = table.rows.iter().map(|r| r.computed).collect();
    ensure(got == [2, 4, 5, 3, 3], || format!("m3(n,2), n=3..7: {got:?}"))?;
    within(start, Duration::from_secs(60))?;

    let long = Instant::now();
    let rep = uniqueness_check(8, 2, 3).map_err(|e| e.to_string())?;
    ensure(rep.value == 4, || format!("m3(8,2) = {}", rep.value))?;
    let co8 = canonical_form(comatching(8).unwrap().graph()).unwrap();
    ensure(rep.witnesses == [co8.clone()], || format!("n=8 witnesses {:?}, comatching {co8}", rep.witnesses))?;
    Ok(format!(
        "m3(n,2) n=3..7 = {got:?}; n=8 value 4, unique witness {co8} ({} graphs, {:.1?})",
        rep.graphs_scanned,
        long.elapsed()
    ))
}

fn non_uniqueness() -> Outcome {
    let rep = uniqueness_check(6, 2, 3).map_err(|e| e.to_string())?;
    ensure(rep.value == 3, || format!("value {}", rep.value))?;
    ensure(rep.witnesses.len() >= 2, || format!("witnesses {:?}", rep.witnesses))?;
    let c4 = canonical_form(&c4_leaves_graph()).unwrap();
    ensure(rep.witnesses.contains(&c4), || format!("{c4} missing from {:?}", rep.witnesses))?;
    for w in &rep.witnesses {
        let g = mis_lab::graph6::decode_str(w).unwrap();
        ensure(naive_count(&g, 2) == 3 && g.is_triangle_free(), || format!("witness {w} does not achieve 3"))?;
        ensure(canonical_form(&g).unwrap() == *w, || format!("witness {w} is not canonical"))?;
    }
    let n7 = uniqueness_check(7, 2, 3).map_err(|e| e.to_string())?;
    ensure(n7.witnesses.len() >= 2, || format!("n=7 witnesses {:?}", n7.witnesses))?;
    Ok(format!("n=6: {} classes {:?}; n=7: {} classes", rep.witnesses.len(), rep.witnesses, n7.witnesses.len()))
}

fn mt_n1() -> Outcome {
    let table = verify(TheoremId::MtN1, &VerifyRanges::n(2..=6).with_t(3..=5)).map_err(|e| e.to_string())?;
    for row in &table.rows {
        let (n, t) = (row.n as u64, row.t.unwrap() as u64);
        let want = if n < t { n } else { t - 2 };
        ensure(row.computed == want, || format!("m_{t}({n},1) = {}, expected {want}", row.computed))?;
    }
    ensure(table.rows.len() == 15, || format!("{} rows", table.rows.len()))?;
    Ok("15 points t=3..5, n=2..6 match".into())
}

fn hyper_star() -> Outcome {
    let start = Instant::now();
    for n in 4..=6 {
        let h = star_hypergraph(n).map_err(|e| e.to_string())?;
        let c = hypergraph_count_k_mis(&h, 2);
        ensure(c == n as u64 - 1, || format!("star n={n}: {c} two-MIS"))?;
        ensure(!h.has_complete(3, 4), || format!("star n={n} contains K_4^3"))?;
    }
    let mut values = Vec::new();
    for n in 4..=5 {
        let rep = exhaustive_m(&SearchSpec::hypergraphs(n).size(2).forbid(4)).map_err(|e| e.to_string())?;
        ensure(rep.value == n as u64 - 1, || format!("m_4^3({n},2) = {}", rep.value))?;
        values.push(rep.value);
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("star counts n-1 for n=4..6; exhaustive m_4^3(n,2) n=4,5 = {values:?}"))
}

fn tight_cycles() -> Outcome {
    let mut necessity = Vec::new();
    for r in 2..=5 {
        for k in 2 * r..=12 {
            let sh = tight_cycle(r, k).map_err(|e| e.to_string())?.shadow();
            ensure(!sh.has_clique(r + 1), || format!("shadow of TC^{r}_{k} contains K_{}", r + 1))?;
        }
        for k in r + 1..2 * r {
            if tight_cycle(r, k).unwrap().shadow().has_clique(r + 1) {
                necessity.push((r, k));
            }
        }
    }
    ensure(!necessity.is_empty(), || "no k < 2r produced a clique".into())?;
    Ok(format!("K_(r+1)-free for 2r <= k <= 12; cliques below 2r at (r,k) = {necessity:?}"))
}

fn blowup_family() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut notes = Vec::new();
    for m in [2usize, 3] {
        let spec = BlowupSpec::uniform(tight_cycle(2, 5).unwrap(), m, &GadgetChoice::default()).unwrap();
        let b = blowup(&spec).map_err(|e| e.to_string())?;
        let g = b.graph();
        ensure(g.n() == 5 * m * m, || format!("m={m}: {} vertices", g.n()))?;
        ensure(g.is_triangle_free(), || format!("m={m}: triangle"))?;
        let c = count_k_mis(g, 5);
        ensure(c >= (m as u64).pow(5), || format!("m={m}: {c} five-MIS"))?;
        let trans = b.gadget_transversals();
        for _ in 0..100 {
            let pick: Vec<VertexSet> = trans.iter().map(|ts| ts[rng.gen_range(0..ts.len())]).collect();
            let s = b.family_member(&pick).map_err(|e| e.to_string())?;
            ensure(g.is_maximal_independent(&s).unwrap() && s.len() == 5, || format!("m={m}: {s:?} not a 5-MIS"))?;
            ensure(g.n() > 32 || naive_is_mis(g, set_mask(&s)), || format!("m={m}: oracle rejects {s:?}"))?;
        }
        notes.push(format!("C5 m={m}: {c} >= {}, ratio {:.3}", m.pow(5), c as f64 / (m as f64).powi(5)));
    }
    for k in [6usize, 7] {
        let b = theorem_b_construction(k, 4, 2).map_err(|e| e.to_string())?;
        let g = b.graph();
        ensure(!g.has_clique(4), || format!("k={k}: contains K4"))?;
        let c = count_k_mis(g, k);
        ensure(c >= 1 << k, || format!("k={k}: {c} k-MIS"))?;
        notes.push(format!("t=4 k={k}: {c} >= {}", 1 << k));
    }
    within(start, Duration::from_secs(300))?;
    Ok(notes.join("; "))
}

fn rs_packings() -> Outcome {
    let mut notes = Vec::new();
    for m in 3..=8 {
        let p = rs_packing(m).map_err(|e| e.to_string())?;
        p.validate().map_err(|e| e.to_string())?;
        let g = p.pg.graph();
        for (u, v) in g.edges() {
            let tri = (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
            ensure(tri == 1, || format!("m={m}: edge ({u},{v}) in {tri} triangles"))?;
        }
        let b = behrend_set(m).len();
        let t = count_transversal_mis(&gadget(&p).map_err(|e| e.to_string())?);
        ensure(t >= (m * b) as u64, || format!("m={m}: {t} < {}", m * b))?;
        notes.push(format!("{m}:{t}>={}", m * b));
    }
    Ok(format!("every edge in one triangle; transversal counts {}", notes.join(" ")))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..500 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        for k in 0..=n {
            let (a, b) = (count_k_mis(&g, k), naive_count(&g, k));
            ensure(a == b, || format!("graph #{i} {g:?} k={k}: engine {a}, oracle {b}"))?;
        }
    }
    for i in 0..500 {
        let n = rng.gen_range(3..=8);
        let mut edges = Vec::new();
        for s in 0u32..1 << n {
            if s.count_ones() == 3 && rng.gen_bool(0.25) {
                edges.push(s);
            }
        }
        let sets = edges.iter().map(|&e| (0..n).filter(|v| e >> v & 1 == 1).collect::<VertexSet>());
        let h = Hypergraph::new(n, sets).unwrap();
        for k in 0..=n {
            let (a, b) = (hypergraph_count_k_mis(&h, k), naive_hyper_count(n, &edges, k));
            ensure(a == b, || format!("3-graph #{i} n={n} k={k}: engine {a}, oracle {b}"))?;
        }
    }
    Ok("500 graphs (n <= 12) and 500 3-graphs (n <= 8), all k".into())
}

fn reduction_pipeline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(4..=14);
        let p = rng.gen_range(0.2..0.8);
        let g = random_triangle_free(&mut rng, n, p, |_, _| true);
        let k = rng.gen_range(2..=3);
        if count_k_mis(&g, k) == 0 {
            continue;
        }
        let seed = rng.gen();
        let res = transversal_reduction(&g, k, 100, seed).map_err(|e| e.to_string())?;
        ensure(res.bound_met, || format!("bound not met: {g:?} k={k} seed={seed} T={}", res.achieved_t))?;
        done += 1;
    }
    Ok("200 random triangle-free graphs, k in {2,3}, bound met in every case".into())
}

fn bound_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let runs = 10_000;
    for i in 0..runs {
        let n = rng.gen_range(3..=15);
        let mut part: Vec<usize> = (0..n).map(|v| if v < 3 { v } else { rng.gen_range(0..3) }).collect();
        part.shuffle(&mut rng);
        let p = rng.gen_range(0.2..0.9);
        let g = random_triangle_free(&mut rng, n, p, |u, v| part[u] != part[v]);
        let parts: Vec<VertexSet> = (0..3).map(|p| (0..n).filter(|&v| part[v] == p).collect()).collect();
        let pg = PartitionedGraph::new(g, parts).unwrap();
        let check = tripartite_t_bound_check(&pg).map_err(|e| e.to_string())?;
        ensure(check.holds, || format!("case #{i}: T = {} > n = {n}", check.t))?;
    }
    let rows = small_k_bound_table(1..=7, 3..=5).map_err(|e| e.to_string())?;
    for r in &rows {
        let bound = r.t as u64 * binom(r.n, r.k - 1);
        ensure(r.value <= bound, || format!("m_{}({},{}) = {} > {bound}", r.t, r.n, r.k, r.value))?;
    }
    Ok(format!("T(G,3) <= n on {runs} tripartite graphs; {} exhaustive small-k bound rows hold", rows.len()))
}

fn binom(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("maximum MIS count m(n)", moon_moser),
        ("triangle-free maximum m3(n)", hujter_tuza),
        ("size-k maximum m(n,k)", nielsen),
        ("triangle-free size-2 table and n=8 uniqueness", m3_n2),
        ("n=6 non-uniqueness", non_uniqueness),
        ("K_t-free size-1 maximum", mt_n1),
        ("3-graph star and m_4^3(n,2)", hyper_star),
        ("tight cycle shadows", tight_cycles),
        ("blowup family and t=4 constructions", blowup_family),
        ("Ruzsa-Szemeredi packings", rs_packings),
        ("engine vs naive oracles", oracle_equivalence),
        ("transversal reduction bound", reduction_pipeline),
        ("tripartite T bound and small-k bound", bound_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
