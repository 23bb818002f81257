//! Property tests over randomly generated small hypergraphs, plus a labeled
//! census cross-check of the tree enumerator via orbit counting.

use proptest::prelude::*;
use ramsey_core::bounds::{best_interval, GoodnessStatus, TreeFamily};
use ramsey_core::combin::binomial;
use ramsey_core::iso::automorphism_count;
use ramsey_core::search::{arrows, ArrowingVerdict, EdgeOrder, SearchConfig};
use ramsey_core::trees::{enumerate_trees, is_tree, TreeMethod};
use ramsey_core::{
    canonical_form, contains_sub, is_isomorphic, loose_cycle_c4, loose_path, Hypergraph,
};

fn arb_h3(max_order: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_order).prop_flat_map(move |p| {
        let slots = binomial(p, 3);
        let cap = max_edges.min(slots as usize);
        proptest::collection::btree_set(0..slots, 0..=cap)
            .prop_map(move |ranks| {
                let ranks: Vec<u64> = ranks.into_iter().collect();
                Hypergraph::from_edge_ranks(p, 3, &ranks).unwrap()
            })
    })
}

fn relabeled(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().map(|&v| perm[v]).collect())
        .collect();
    Hypergraph::new(h.order(), h.uniformity(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_is_uniformity_times_edge_count(h in arb_h3(8, 8)) {
        let total: usize = h.degrees().iter().sum();
        prop_assert_eq!(total, 3 * h.edge_count());
    }

    #[test]
    fn deleting_an_edge_only_splits_components(h in arb_h3(8, 8)) {
        prop_assume!(h.edge_count() > 0);
        let mut block_of = vec![usize::MAX; h.order()];
        for (i, block) in h.components().blocks().iter().enumerate() {
            for &v in block {
                block_of[v] = i;
            }
        }
        for i in 0..h.edge_count() {
            let reduced = h.without_edge_index(i);
            for block in reduced.components().blocks() {
                let first = block_of[block[0]];
                prop_assert!(block.iter().all(|&v| block_of[v] == first));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(
        (h, perm) in arb_h3(7, 6).prop_flat_map(|h| {
            let p = h.order();
            (Just(h), Just((0..p).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let g = relabeled(&h, &perm);
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
        prop_assert!(is_isomorphic(&h, &g));
    }

    #[test]
    fn recognizers_agree_on_random_instances(h in arb_h3(8, 5)) {
        let verdicts = [
            is_tree(&h, TreeMethod::Build),
            is_tree(&h, TreeMethod::Acyclic),
            is_tree(&h, TreeMethod::Components),
            is_tree(&h, TreeMethod::UniquePath),
        ];
        prop_assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{verdicts:?}");
    }

    #[test]
    fn edge_subsets_always_embed(
        (h, keep) in arb_h3(7, 6).prop_flat_map(|h| {
            let e = h.edge_count();
            (Just(h), proptest::collection::vec(any::<bool>(), e))
        })
    ) {
        let kept: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(e, _)| e.vertices().to_vec())
            .collect();
        let sub = Hypergraph::new(h.order(), 3, kept).unwrap();
        prop_assert!(contains_sub(&h, &sub));
    }

    #[test]
    fn grid_intervals_are_coherent(
        family in prop_oneof![Just(TreeFamily::Tree), Just(TreeFamily::Path)],
        j in 1usize..=8,
        n in 3usize..=12,
    ) {
        let m = 2 * j + 1;
        let cell = best_interval(family, m, n, 3).unwrap();
        prop_assert!(cell.interval.lower <= cell.interval.upper);
        prop_assert!(cell.interval.lower >= cell.target);
        prop_assert_ne!(cell.status, GoodnessStatus::NotGood);
        prop_assert_eq!(
            cell.status == GoodnessStatus::ProvenGood,
            cell.interval.upper == cell.target
        );
    }
}

#[test]
fn labeled_tree_census_matches_orbit_counts() {
    // Orders, class counts, and labeled totals; the labeled totals are
    // factorial(m) / |Aut| summed over the isomorphism classes.
    let factorial = |k: usize| -> u64 { (1..=k as u64).product() };
    for (m, classes, labeled) in [(5usize, 1usize, 15u64), (7, 2, 735), (9, 4, 76545)] {
        let trees = enumerate_trees(m, 3).unwrap();
        assert_eq!(trees.len(), classes, "class count at order {m}");
        let total: u64 = trees
            .iter()
            .map(|t| factorial(m) / automorphism_count(t))
            .sum();
        assert_eq!(total, labeled, "labeled total at order {m}");
    }
}

#[test]
fn verdicts_stable_across_search_options() {
    let configs = |budget| {
        [(false, EdgeOrder::Colex), (false, EdgeOrder::DegreeGuided),
         (true, EdgeOrder::Colex), (true, EdgeOrder::DegreeGuided)]
            .map(|(symmetry, edge_order)| SearchConfig { node_budget: budget, symmetry, edge_order })
    };
    let edge = loose_path(3, 3).unwrap();
    let c4 = loose_cycle_c4();
    for pattern in [&edge, &c4] {
        for n in 3..=4 {
            for p in 4..=5 {
                let kinds: Vec<u8> = configs(10_000_000)
                    .iter()
                    .map(|cfg| match arrows(p, pattern, n, cfg).unwrap().verdict {
                        ArrowingVerdict::Arrows => 0,
                        ArrowingVerdict::Counterexample(_) => 1,
                        ArrowingVerdict::BudgetExhausted => 2,
                    })
                    .collect();
                assert!(
                    kinds.iter().all(|&k| k == kinds[0]),
                    "pattern order {}, n = {n}, p = {p}: {kinds:?}",
                    pattern.order()
                );
            }
        }
    }
}

#[test]
fn arrowing_is_monotone_in_host_order() {
    let cfg = SearchConfig::default();
    let edge = loose_path(3, 3).unwrap();
    let c4 = loose_cycle_c4();
    for (pattern, n, threshold) in [(&edge, 4usize, 4usize), (&c4, 4, 5)] {
        for p in threshold - 1..=threshold + 1 {
            let got = arrows(p, pattern, n, &cfg).unwrap();
            let expected_arrows = p >= threshold;
            match got.verdict {
                ArrowingVerdict::Arrows => assert!(expected_arrows, "p = {p}"),
                ArrowingVerdict::Counterexample(w) => {
                    assert!(!expected_arrows, "p = {p}");
                    assert_eq!(w.order(), p);
                }
                ArrowingVerdict::BudgetExhausted => panic!("budget too small at p = {p}"),
            }
        }
    }
}
