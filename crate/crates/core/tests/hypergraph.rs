mod common;

use common::{arb_graph, mask, minimal_members, minimal_transversals, set, Adj};
use lexdom::{Error, Hypergraph, VertexSet};
use proptest::prelude::*;

/// Sperner hypergraphs on `1..=7` vertices, as masks.
fn arb_sperner() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(1u64..1 << n, 1..=6).prop_map(move |raw| (n, minimal_members(&raw)))
    })
}

fn build(n: usize, edges: &[u64]) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|&e| set(n, e)).collect()).unwrap()
}

fn sorted(sets: &[VertexSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(mask).collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn berge_matches_subset_scan((n, edges) in arb_sperner()) {
        let h = build(n, &edges);
        let tr = h.enumerate_minimal_transversals().unwrap();
        prop_assert_eq!(sorted(&tr), minimal_transversals(n, &edges));
        for t in &tr {
            prop_assert!(h.is_minimal_transversal(t).unwrap());
        }
    }

    #[test]
    fn duality_involution((n, edges) in arb_sperner()) {
        let h = build(n, &edges);
        let dual = Hypergraph::new(n, h.enumerate_minimal_transversals().unwrap()).unwrap();
        prop_assert_eq!(sorted(&dual.enumerate_minimal_transversals().unwrap()), edges);
    }

    #[test]
    fn duality_on_arbitrary_families((n, raw) in (1usize..=7).prop_flat_map(|n| (Just(n), proptest::collection::vec(1u64..1 << n, 1..=6)))) {
        let h = build(n, &raw);
        let reduced = h.sperner_reduce();
        prop_assert_eq!(sorted(reduced.edges()), minimal_members(&raw));
        prop_assert!(reduced.is_sperner());
        let dual = Hypergraph::new(n, h.enumerate_minimal_transversals().unwrap()).unwrap();
        prop_assert_eq!(sorted(&dual.enumerate_minimal_transversals().unwrap()), minimal_members(&raw));
    }

    #[test]
    fn bounded_size_decision((n, edges) in arb_sperner(), k in 1usize..=7) {
        let h = build(n, &edges);
        let all = minimal_transversals(n, &edges);
        let uniform = all.iter().all(|t| t.count_ones() as usize == k);
        match h.all_minimal_transversals_have_size(k).unwrap() {
            None => prop_assert!(uniform),
            Some(w) => {
                prop_assert!(!uniform);
                prop_assert!(w.len() != k);
                prop_assert!(all.contains(&mask(&w)));
            }
        }
    }

    #[test]
    fn bounded_scan_lists_small_transversals((n, edges) in arb_sperner(), k in 0usize..=7) {
        let h = build(n, &edges);
        let want: Vec<u64> = minimal_transversals(n, &edges).into_iter().filter(|t| t.count_ones() as usize <= k).collect();
        prop_assert_eq!(sorted(&h.minimal_transversals_up_to_size(k)), want);
    }

    #[test]
    fn text_round_trip((n, edges) in arb_sperner()) {
        let h = build(n, &edges);
        prop_assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn closed_neighborhood_transversals_are_minimal_dominating_sets(g in arb_graph(1, 8)) {
        let h = Hypergraph::closed_neighborhoods(&g);
        prop_assert!(h.is_sperner());
        let a = Adj::of(&g);
        prop_assert_eq!(sorted(&h.enumerate_minimal_transversals().unwrap()), a.minimal_dominating_sets());
    }
}

#[test]
fn degenerate_hypergraphs() {
    let none = Hypergraph::new(3, vec![]).unwrap();
    assert_eq!(none.enumerate_minimal_transversals().unwrap(), vec![VertexSet::empty(3)]);
    let with_empty = Hypergraph::new(3, vec![VertexSet::empty(3)]).unwrap();
    assert!(matches!(with_empty.enumerate_minimal_transversals(), Err(Error::EmptyHyperedge { index: 0 })));
    let nested = Hypergraph::from_lists(3, &[&[0], &[0, 1]]).unwrap();
    assert!(!nested.is_sperner());
    assert!(matches!(nested.all_minimal_transversals_have_size(1), Err(Error::NotSperner { .. })));
    assert!(Hypergraph::from_lists(3, &[&[0, 3]]).is_err());
}
