//! Property tests for the structural invariants of the value types.

use proptest::prelude::*;

use berge_core::shadow::shadow_with_threshold;
use berge_core::{
    check_certificate, find_berge_clique, find_berge_cycle, lift_shadow_clique,
    lift_shadow_cycle, shadow, ColoredHypergraph, FamilySpec, Hypergraph, VertexSet,
};

/// A random 3-uniform hypergraph as (n, subset of the complete edge list).
fn hypergraph_strategy() -> impl Strategy<Value = Hypergraph> {
    (4usize..=7).prop_flat_map(|n| {
        let base = Hypergraph::complete(n, 3).unwrap();
        let m = base.edge_count();
        proptest::collection::vec(proptest::bool::ANY, m).prop_map(move |keep| {
            let edges: Vec<Vec<usize>> = (0..m)
                .filter(|&i| keep[i])
                .map(|i| base.edge(i).to_vec())
                .collect();
            Hypergraph::new(n, 3, edges).unwrap()
        })
    })
}

fn colored_strategy(t: usize) -> impl Strategy<Value = ColoredHypergraph> {
    hypergraph_strategy().prop_flat_map(move |h| {
        let m = h.edge_count();
        proptest::collection::vec(0..t, m)
            .prop_map(move |colors| ColoredHypergraph::new(h.clone(), t, colors).unwrap())
    })
}

proptest! {
    #[test]
    fn parse_serialize_round_trips(h in hypergraph_strategy()) {
        let text = h.serialize();
        prop_assert_eq!(Hypergraph::parse(&text).unwrap(), h);
    }

    #[test]
    fn degree_balances_edge_removal(h in hypergraph_strategy()) {
        for v in 0..h.vertex_count() {
            let (reduced, _) = h.remove_vertex(v).unwrap();
            prop_assert_eq!(reduced.edge_count() + h.degree(v).unwrap(), h.edge_count());
        }
    }

    #[test]
    fn induced_on_full_set_is_identity(h in hypergraph_strategy()) {
        let (same, _) = h.induced(h.vertex_set()).unwrap();
        prop_assert_eq!(same, h);
    }

    #[test]
    fn degree_sum_counts_incidences(h in hypergraph_strategy()) {
        let total: usize = (0..h.vertex_count()).map(|v| h.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 3 * h.edge_count());
    }

    #[test]
    fn neighborhoods_are_shadow_neighbors(h in hypergraph_strategy()) {
        let pairs = shadow(&h).unwrap();
        for v in 0..h.vertex_count() {
            let nb = h.neighborhood(v, h.vertex_set()).unwrap();
            for u in 0..h.vertex_count() {
                let adjacent = pairs.contains(&(u.min(v), u.max(v))) && u != v;
                prop_assert_eq!(nb.contains(u), adjacent);
            }
        }
    }

    #[test]
    fn threshold_lists_shrink_as_threshold_grows(ch in colored_strategy(3)) {
        let s1 = shadow_with_threshold(&ch, 1).unwrap();
        let s2 = shadow_with_threshold(&ch, 2).unwrap();
        let s3 = shadow_with_threshold(&ch, 3).unwrap();
        for (u, v) in s1.pairs() {
            let l1 = s1.list(u, v);
            for c in s2.list(u, v) {
                prop_assert!(l1.contains(&c));
            }
            let l2 = s2.list(u, v);
            for c in s3.list(u, v) {
                prop_assert!(l2.contains(&c));
            }
        }
        // Same pair set at every threshold.
        prop_assert_eq!(s1.pairs().count(), s3.pairs().count());
    }

    #[test]
    fn found_certificates_always_validate(h in hypergraph_strategy()) {
        for len in 3..=h.vertex_count().min(6) {
            if let Some(cert) = find_berge_cycle(&h, len).unwrap() {
                prop_assert!(check_certificate(&h, &cert, &FamilySpec::Cycle(len), None).is_ok());
            }
        }
        for m in 2..=h.vertex_count().min(5) {
            if let Some(cert) = find_berge_clique(&h, m).unwrap() {
                prop_assert!(check_certificate(&h, &cert, &FamilySpec::Clique(m), None).is_ok());
            }
        }
    }

    #[test]
    fn lifts_succeed_whenever_preconditions_hold(ch in colored_strategy(2)) {
        let s2 = shadow_with_threshold(&ch, 2).unwrap();
        let s3 = shadow_with_threshold(&ch, 3).unwrap();
        let n = ch.base().vertex_count();
        // Triangle cores for the cycle lift.
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for color in 0..2 {
                        let core = [a, b, c];
                        let ok = s2.list_contains(a, b, color)
                            && s2.list_contains(b, c, color)
                            && s2.list_contains(c, a, color);
                        if ok {
                            let cert = lift_shadow_cycle(&ch, &core, color).unwrap();
                            prop_assert!(check_certificate(
                                ch.base(), &cert, &FamilySpec::Cycle(3), Some((&ch, color))
                            ).is_ok());
                        }
                        let ok3 = s3.list_contains(a, b, color)
                            && s3.list_contains(b, c, color)
                            && s3.list_contains(c, a, color);
                        if ok3 {
                            let set: VertexSet = core.iter().copied().collect();
                            let cert = lift_shadow_clique(&ch, set, color).unwrap();
                            prop_assert!(check_certificate(
                                ch.base(), &cert, &FamilySpec::Clique(3), Some((&ch, color))
                            ).is_ok());
                        }
                    }
                }
            }
        }
    }
}
