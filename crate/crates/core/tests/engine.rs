use std::ops::ControlFlow;

use proptest::prelude::*;

use mis_lab::constructions::{
    blowup, comatching, gadget, hypergraph_construction, rs_packing, star_hypergraph, theorem_b_construction,
    tight_cycle, trivial_packing, BlowupSpec, GadgetChoice,
};
use mis_lab::engine::{
    check_k5_hypothesis, count_all_mis, count_k_mis, count_k_mis_parallel, count_transversal_mis,
    enumerate_k_mis, greedy_mis_partition, hypergraph_count_k_mis, mis_size_histogram, transversal_reduction,
    tripartite_t_bound_check, MisQuery,
};
use mis_lab::{Error, Graph, Hypergraph, PartitionedGraph, VertexSet};

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn c5_blowup(m: usize) -> PartitionedGraph {
    let spec = BlowupSpec::uniform(tight_cycle(2, 5).unwrap(), m, &GadgetChoice::default()).unwrap();
    blowup(&spec).unwrap().into_partitioned()
}

fn naive_count(g: &Graph, k: usize) -> u64 {
    let n = g.n();
    let mis = |s: u32| {
        let has = |v: usize| s >> v & 1 == 1;
        (0..n).all(|u| !has(u) || (0..n).all(|v| !has(v) || !g.has_edge(u, v)))
            && (0..n).all(|w| has(w) || (0..n).any(|v| has(v) && g.has_edge(v, w)))
    };
    (0u32..1 << n).filter(|&s| s.count_ones() as usize == k && mis(s)).count() as u64
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

#[test]
fn counting_examples() {
    let k3 = Graph::complete(3).unwrap();
    let two_k3 = mis_lab::disjoint_union(&[k3.clone(), k3.clone()]).unwrap();
    assert_eq!(count_k_mis(&two_k3, 2), 9);
    assert_eq!(count_all_mis(&two_k3), 9);
    let k2 = Graph::complete(2).unwrap();
    let mixed = mis_lab::disjoint_union(&[k2.clone(), k2.clone(), k3]).unwrap();
    assert_eq!(count_k_mis(&mixed, 3), 12);
    let e5 = Graph::empty(5).unwrap();
    assert_eq!(count_k_mis(&e5, 5), 1);
    assert!((0..5).all(|k| count_k_mis(&e5, k) == 0));
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(count_all_mis(&c4), 2);
    assert_eq!(count_all_mis(&mis_lab::disjoint_union(&[k2.clone(), k2]).unwrap()), 4);
}

#[test]
fn transversal_examples() {
    assert_eq!(count_transversal_mis(&comatching(8).unwrap()), 4);
    assert_eq!(count_transversal_mis(&gadget(&trivial_packing(3, 2).unwrap()).unwrap()), 2);
    assert!(count_transversal_mis(&c5_blowup(2)) >= 32);
}

#[test]
fn query_limit_and_partition_checks() {
    let g = comatching(8).unwrap();
    assert_eq!(MisQuery::size(2).with_limit(3).count(g.graph(), None).unwrap(), 3);
    assert_eq!(MisQuery::transversal(2).count(g.graph(), Some(&g)).unwrap(), 4);
    assert!(MisQuery::transversal(2).count(g.graph(), None).is_err());
    let mut seen = 0;
    enumerate_k_mis(g.graph(), 2, |_| {
        seen += 1;
        ControlFlow::Break(())
    });
    assert_eq!(seen, 1);
}

#[test]
fn greedy_partition_examples() {
    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let blocks = greedy_mis_partition(&c5, &set(&[0, 2])).unwrap();
    assert_eq!(blocks.len(), 3);
    let union = blocks.iter().fold(VertexSet::EMPTY, |a, b| a.union(b));
    assert_eq!(union, c5.vertices());
    assert!(blocks.iter().all(|b| c5.is_independent(b).unwrap()));

    let e = Graph::empty(4).unwrap();
    let blocks = greedy_mis_partition(&e, &e.vertices()).unwrap();
    assert!(blocks[..4].iter().all(VertexSet::is_empty));
    assert_eq!(blocks[4], e.vertices());

    let co6 = comatching(6).unwrap();
    let blocks = greedy_mis_partition(co6.graph(), &set(&[0, 3])).unwrap();
    assert_eq!(blocks[0], set(&[4, 5]));
    assert_eq!(blocks[1], set(&[1, 2]));
    assert_eq!(blocks[2], set(&[0, 3]));
    assert!(blocks.iter().all(|b| co6.graph().is_independent(b).unwrap()));
}

#[test]
fn reduction_on_comatching() {
    let g = comatching(8).unwrap().into_graph();
    let res = transversal_reduction(&g, 2, 20, 7).unwrap();
    assert_eq!(res.source_m, 4);
    assert_eq!(res.composition, [1, 1, 0]);
    assert_eq!(res.composition_count, 3);
    assert_eq!(res.achieved_t, 3);
    assert!(res.bound_met);
    assert_eq!(res.seed, 7);
}

#[test]
fn reduction_on_blowup_and_errors() {
    let g = c5_blowup(2).into_graph();
    let res = transversal_reduction(&g, 5, 10, 1).unwrap();
    assert!(res.bound_met);
    assert!(res.achieved_t >= 1);
    let again = transversal_reduction(&g, 5, 10, 1).unwrap();
    assert_eq!(again.achieved_t, res.achieved_t);
    assert_eq!(again.vertex_map, res.vertex_map);

    let e = Graph::empty(3).unwrap();
    assert!(matches!(transversal_reduction(&e, 2, 5, 0), Err(Error::Domain(_))));
    assert!(transversal_reduction(&Graph::complete(3).unwrap(), 1, 5, 0).is_err());
}

#[test]
fn k5_hypothesis_examples() {
    assert!(check_k5_hypothesis(&c5_blowup(2)).unwrap());
    let k5 = PartitionedGraph::with_block_sizes(Graph::complete(5).unwrap(), &[1; 5]).unwrap();
    assert!(!check_k5_hypothesis(&k5).unwrap());
    let e5 = PartitionedGraph::with_block_sizes(Graph::empty(5).unwrap(), &[1; 5]).unwrap();
    assert!(check_k5_hypothesis(&e5).unwrap());
    assert!(check_k5_hypothesis(&comatching(4).unwrap()).is_err());
}

#[test]
fn tripartite_bound_examples() {
    let rs = gadget(&rs_packing(4).unwrap()).unwrap();
    assert!(tripartite_t_bound_check(&rs).is_err());
    let t = count_transversal_mis(&rs);
    assert!((8..=24).contains(&t), "T = {t}");
    for m in 1..=2 {
        let c = tripartite_t_bound_check(&gadget(&trivial_packing(3, m).unwrap()).unwrap()).unwrap();
        assert_eq!(c.t, m as u64);
        assert!(c.holds);
    }
    // three distinct indices across the parts already form a triangle
    assert!(tripartite_t_bound_check(&gadget(&trivial_packing(3, 3).unwrap()).unwrap()).is_err());
    let e = PartitionedGraph::with_block_sizes(Graph::empty(3).unwrap(), &[1, 1, 1]).unwrap();
    assert_eq!(tripartite_t_bound_check(&e).unwrap().t, 1);
}

#[test]
fn hypergraph_examples() {
    assert_eq!(hypergraph_count_k_mis(&star_hypergraph(6).unwrap(), 2), 5);
    let hc = hypergraph_construction(3, 3, 6).unwrap();
    assert!(hypergraph_count_k_mis(&hc.hypergraph, 3) >= 8);
    let e = Hypergraph::new(4, []).unwrap();
    assert_eq!(hypergraph_count_k_mis(&e, 4), 1);
}

#[test]
fn theorem_b_lower_bounds() {
    for k in [4usize, 5, 6] {
        for m in [2usize, 3] {
            let b = theorem_b_construction(k, 3, m).unwrap();
            assert!(b.graph().is_triangle_free());
            assert!(count_k_mis(b.graph(), k) >= (m as u64).pow(k as u32), "k={k} m={m}");
        }
    }
}

#[test]
fn parallel_count_agrees() {
    let g = c5_blowup(3).into_graph();
    assert_eq!(count_k_mis_parallel(&g, 5), count_k_mis(&g, 5));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_subset_oracle(g in graph_strategy(12)) {
        for k in 0..=g.n() {
            prop_assert_eq!(count_k_mis(&g, k), naive_count(&g, k));
        }
    }

    #[test]
    fn sizes_sum_to_total(g in graph_strategy(12)) {
        let hist = mis_size_histogram(&g);
        let by_k: u64 = (0..=g.n()).map(|k| count_k_mis(&g, k)).sum();
        prop_assert_eq!(hist.iter().sum::<u64>(), count_all_mis(&g));
        prop_assert_eq!(by_k, count_all_mis(&g));
    }

    #[test]
    fn relabelling_invariance(g in graph_strategy(12), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permute(&perm).unwrap();
        for k in 0..=g.n() {
            prop_assert_eq!(count_k_mis(&h, k), count_k_mis(&g, k));
        }
    }

    #[test]
    fn transversal_at_most_k_count(
        sizes in prop::collection::vec(1usize..4, 2..5),
        bits in prop::collection::vec(any::<bool>(), 66),
    ) {
        let n: usize = sizes.iter().sum();
        let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
        let cross = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part[u] != part[v]);
        let g = Graph::from_edges(n, cross.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap();
        let pg = PartitionedGraph::with_block_sizes(g, &sizes).unwrap();
        prop_assert!(count_transversal_mis(&pg) <= count_k_mis(pg.graph(), sizes.len()));
    }

    #[test]
    fn hypergraph_matches_subset_oracle(n in 3usize..=8, bits in prop::collection::vec(prop::bool::weighted(0.3), 56)) {
        let triples: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() == 3).collect();
        let edges: Vec<u32> = triples.into_iter().zip(bits).filter(|(_, b)| *b).map(|(t, _)| t).collect();
        let h = Hypergraph::new(n, edges.iter().map(|&e| (0..n).filter(|v| e >> v & 1 == 1).collect())).unwrap();
        let indep = |s: u32| edges.iter().all(|&e| e & !s != 0);
        for k in 0..=n {
            let want = (0u32..1 << n)
                .filter(|&s| s.count_ones() as usize == k && indep(s) && (0..n).all(|w| s >> w & 1 == 1 || !indep(s | 1 << w)))
                .count() as u64;
            prop_assert_eq!(hypergraph_count_k_mis(&h, k), want);
        }
    }
}
