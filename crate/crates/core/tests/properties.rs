//! Property tests over randomly generated graphs.

use proptest::collection::vec;
use proptest::prelude::*;

use toughham_core::{encode_graph6, parse_graph6, Graph, VertexSet};

/// A random simple graph on up to `max_n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n.saturating_sub(1)) / 2;
        vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("generated edges are valid")
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let encoded = encode_graph6(&g);
        let decoded = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(&decoded, &g);
        prop_assert_eq!(encode_graph6(&decoded), encoded);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(24)) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn inducing_on_everything_is_identity(g in arb_graph(16)) {
        let n = g.order();
        let (h, map) = g.induced(&VertexSet::full(n)).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (0..n).collect::<Vec<_>>());
    }

    #[test]
    fn components_form_a_partition(g in arb_graph(20)) {
        let comps = g.components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, g.order());
        for (i, a) in comps.iter().enumerate() {
            for b in comps.iter().skip(i + 1) {
                prop_assert!(a.is_disjoint(b));
            }
        }
        for (u, v) in g.edges() {
            let cu = comps.iter().position(|c| c.contains(u));
            let cv = comps.iter().position(|c| c.contains(v));
            prop_assert_eq!(cu, cv);
        }
    }

    #[test]
    fn vertex_set_complement_involution(members in proptest::collection::btree_set(0usize..30, 0..20)) {
        let s = VertexSet::from_members(30, members.iter().copied()).unwrap();
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.union(&s.complement()).len(), 30);
        prop_assert!(s.intersection(&s.complement()).is_empty());
    }
}
