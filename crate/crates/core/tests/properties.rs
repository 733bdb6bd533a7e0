use proptest::prelude::*;

use hereditary::canon::{canonical_form, canonical_key, is_isomorphic};
use hereditary::classes::{GraphClass, HereditaryClass};
use hereditary::graph6;
use hereditary::matroid::pg;
use hereditary::operators::{edge_add_member, edge_apex_member, OperatorSpec};
use hereditary::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn base_class() -> impl Strategy<Value = HereditaryClass> {
    prop_oneof![
        Just(HereditaryClass::Split),
        Just(HereditaryClass::Threshold),
        Just(HereditaryClass::Cograph),
        Just(HereditaryClass::Chordal),
    ]
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(16)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn canonical_key_ignores_labels((g, perm) in relabelled(12)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert!(is_isomorphic(&g, &h));
        let cf = canonical_form(&g);
        prop_assert_eq!(g.relabel(&cf.perm), cf.graph);
    }

    #[test]
    fn adding_an_edge_changes_the_key(g in graph(9)) {
        if let Some((u, v)) = g.non_edges().next() {
            let h = g.add_edge(u, v).unwrap();
            prop_assert_ne!(canonical_key(&g), canonical_key(&h));
        }
    }

    #[test]
    fn membership_is_closed_under_vertex_deletion(g in graph(8), base in base_class(), op in 0..4usize) {
        let spec = match op {
            0 => OperatorSpec::base(base),
            1 => OperatorSpec::edge_add(base),
            2 => OperatorSpec::edge_apex(base),
            _ => OperatorSpec::vertex_apex(base),
        };
        if spec.contains(&g) {
            for v in 0..g.order() {
                prop_assert!(spec.contains(&g.delete_vertex(v).unwrap()), "{} {} v={}", spec, g, v);
            }
        }
    }

    #[test]
    fn edge_apex_certificates_are_edges(g in graph(8), base in base_class()) {
        if let Some(cert) = edge_apex_member(&g, &base) {
            prop_assert!(base.contains(&cert.apply(&g).unwrap()));
        }
        if let Some(cert) = edge_add_member(&g, &base) {
            prop_assert!(base.contains(&cert.apply(&g).unwrap()));
        }
    }

    #[test]
    fn closure_and_rank_laws_in_pg_3_2(a in 0u32..1 << 15, b in 0u32..1 << 15) {
        let s = pg(2, 4).unwrap();
        let (ca, cb) = (s.closure(a), s.closure(b));
        prop_assert_eq!(a & ca, a);
        prop_assert_eq!(s.closure(ca), ca);
        prop_assert_eq!(s.rank(ca), s.rank(a));
        if a & b == a {
            prop_assert_eq!(ca & cb, ca);
        }
        prop_assert!(s.rank(a | b) + s.rank(a & b) <= s.rank(a) + s.rank(b));
        prop_assert!(s.rank(a) <= a.count_ones() as usize);
    }
}
