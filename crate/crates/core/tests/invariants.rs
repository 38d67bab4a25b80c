use proptest::prelude::*;

use vrel_core::evaluation::{evaluate_graph, GraphInput};
use vrel_core::generators::{build_dataset, passes_filter, DatasetSpec, DedupSet, Quotas};
use vrel_core::graph::canonical_key;
use vrel_core::heuristics::{apply, HeuristicId};
use vrel_core::reliability::{classify_subsets, count_connected, recount_for_insertion};
use vrel_core::SimpleGraph;

/// Connected graphs on 3..=9 vertices: a random spanning tree plus extra edges.
fn connected_graph() -> impl Strategy<Value = SimpleGraph> {
    (3usize..=9)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
            (Just(n), parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(k, &p)| (p, k + 1)).collect();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if extra[k] && !edges.contains(&(i, j)) {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            SimpleGraph::from_edges(n, edges).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_labels((g, perm) in connected_graph().prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        prop_assert_eq!(canonical_key(&g), canonical_key(&g.relabel(&perm)));
    }

    #[test]
    fn insertions_never_lower_reliability(g in connected_graph()) {
        let cls = classify_subsets(&g).unwrap();
        let base = count_connected(&cls);
        for e in g.non_edges() {
            let after = recount_for_insertion(&g, &cls, e).unwrap();
            prop_assert!(after.dominates(&base));
            prop_assert!(after.score() >= base.score());
            prop_assert_eq!(&after, &count_connected(&classify_subsets(&g.insert_edge(e).unwrap()).unwrap()));
        }
    }

    #[test]
    fn heuristics_propose_sorted_non_edges(g in connected_graph(), seed in any::<u64>()) {
        prop_assume!(g.non_edge_count() > 0);
        for id in HeuristicId::OPERATIONAL {
            let r = apply(id, &g, seed).unwrap();
            prop_assert!(!r.is_empty());
            let edges: Vec<_> = r.edges().collect();
            prop_assert!(edges.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(edges.iter().all(|e| !g.has_edge(e.i, e.j)));
        }
        let phi: Vec<_> = apply(HeuristicId::Phi, &g, 0).unwrap().edges().collect();
        let cap = apply(HeuristicId::PhiCap, &g, 0).unwrap();
        prop_assert!(phi.contains(&cap.candidates[0].edge));
    }

    #[test]
    fn rdi_bounds_and_post_hoc_dominance(g in connected_graph(), seed in any::<u64>()) {
        prop_assume!(g.non_edge_count() > 0);
        let e = evaluate_graph(&GraphInput { id: "g".into(), model: "x".into(), graph: g }, seed).unwrap();
        let zero = num_rational::BigRational::from_integer(0.into());
        let one = num_rational::BigRational::from_integer(1.into());
        let mut seen_zero = false;
        let mut seen_one = false;
        for r in &e.records {
            for s in &r.insertions {
                prop_assert!(s.rdi >= zero && s.rdi <= one);
                seen_zero |= s.rdi == zero;
                seen_one |= s.rdi == one;
            }
        }
        prop_assert!(seen_zero);
        prop_assert_eq!(seen_one, e.f_best != e.f_worst);
        let rdi = |h| e.record(h).unwrap().rdi.clone();
        prop_assert!(rdi(HeuristicId::BPostHoc) <= rdi(HeuristicId::Beta));
        prop_assert!(rdi(HeuristicId::GammaPostHoc) <= rdi(HeuristicId::Gamma));
    }
}

#[test]
fn built_datasets_respect_filters() {
    let spec = DatasetSpec::new(vec![7, 9], Quotas { er: 8, ba: 4, ws: 4 }, 31);
    let d = build_dataset(&spec).unwrap();
    assert_eq!(d.graphs.len(), 32);
    let mut classes = DedupSet::new();
    for e in &d.graphs {
        assert_eq!(e.graph.n(), e.order);
        assert!(passes_filter(&e.graph));
        assert!(classes.insert_graph(&e.graph), "{} duplicates an earlier graph", e.id);
    }
}
