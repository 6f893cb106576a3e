//! Solver/oracle equivalences over exhaustive small-graph enumerations.
//!
//! The oracles are independently coded subset scans and dynamic programs
//! (see `toughham_core::oracles`); any disagreement here points at a real
//! bug on one of the two sides.

use toughham_core::claims::SUBSET_SCAN_LIMIT;
use toughham_core::enumerate::{enumerate_graphs, random_graph, EnumerationSpec};
use toughham_core::oracles;
use toughham_core::rational::Rational;
use toughham_core::toughness::{is_t_tough, toughness_exact, ToughnessValue};
use toughham_core::{
    encode_graph6, hamiltonian_cycle, independence_number, longest_cycle, parse_graph6, Graph,
    Pattern,
};

fn all_graphs(n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumerationSpec {
        n,
        connected_only: false,
        filters: vec![],
    })
    .unwrap()
    .collect()
}

fn connected_graphs(n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumerationSpec {
        n,
        connected_only: true,
        filters: vec![],
    })
    .unwrap()
    .collect()
}

#[test]
fn graph6_round_trip_exhaustive() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let encoded = encode_graph6(&g);
            let decoded = parse_graph6(&encoded).unwrap();
            assert_eq!(decoded, g, "round trip at {encoded}");
            assert_eq!(encode_graph6(&decoded), encoded);
        }
    }
}

#[test]
fn components_partition_every_enumerated_graph() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let comps = g.components();
            let mut seen = vec![false; n];
            for comp in &comps {
                for v in comp.iter() {
                    assert!(!seen[v], "components overlap");
                    seen[v] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "components cover the graph");
            for (u, v) in g.edges() {
                let cu = comps.iter().position(|c| c.contains(u));
                let cv = comps.iter().position(|c| c.contains(v));
                assert_eq!(cu, cv, "no edge crosses components");
            }
        }
    }
}

#[test]
fn induced_pattern_search_matches_subset_scan() {
    let patterns: Vec<(Pattern, Graph)> =
        Pattern::ALL.iter().map(|&p| (p, p.graph())).collect();
    for n in 1..=7 {
        for g in all_graphs(n) {
            for (pattern, pg) in &patterns {
                let fast = toughham_core::pattern::find_induced(pg, &g);
                let slow = oracles::naive_contains_induced(&g, pg);
                assert_eq!(
                    fast.is_some(),
                    slow,
                    "pattern {pattern} in {}",
                    encode_graph6(&g)
                );
                if let Some(embedding) = fast {
                    assert!(embedding.verify(pg, &g));
                }
            }
        }
    }
    // larger random hosts
    for seed in 0..200 {
        let g = random_graph(9, Rational::new(2, 5).unwrap(), seed).unwrap();
        for (pattern, pg) in &patterns {
            let fast = toughham_core::pattern::find_induced(pg, &g).is_some();
            let slow = oracles::naive_contains_induced(&g, pg);
            assert_eq!(fast, slow, "pattern {pattern} seed {seed}");
        }
    }
}

#[test]
fn independence_matches_subset_scan_and_complement_clique() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let fast = independence_number(&g);
            assert_eq!(fast.size, oracles::naive_independence(&g));
            assert_eq!(fast.size, oracles::naive_max_clique(&g.complement()));
            assert_eq!(fast.witness.to_vec(), oracles::naive_lex_min_mis(&g));
        }
    }
}

#[test]
fn connectivity_matches_subset_scan() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            assert_eq!(
                toughham_core::vertex_connectivity(&g),
                oracles::naive_connectivity(&g),
                "connectivity of {}",
                encode_graph6(&g)
            );
        }
    }
}

#[test]
fn hamiltonicity_matches_permutation_and_dp_oracles() {
    for n in 3..=7 {
        for g in connected_graphs(n) {
            let fast = hamiltonian_cycle(&g);
            let perm = oracles::permutation_is_hamiltonian(&g);
            assert_eq!(fast.is_some(), perm, "graph {}", encode_graph6(&g));
        }
    }
    for g in connected_graphs(8) {
        let fast = hamiltonian_cycle(&g);
        assert_eq!(
            fast.is_some(),
            oracles::naive_is_hamiltonian(&g),
            "graph {}",
            encode_graph6(&g)
        );
        if let Some(cycle) = fast {
            assert_eq!(cycle.len(), 8);
        }
    }
}

#[test]
fn circumference_matches_dp_oracle() {
    for n in 3..=7 {
        for g in connected_graphs(n) {
            let slow = oracles::naive_circumference(&g);
            match slow {
                None => assert!(longest_cycle(&g).is_err()),
                Some(len) => {
                    let fast = longest_cycle(&g).unwrap();
                    assert_eq!(fast.circumference, len, "graph {}", encode_graph6(&g));
                }
            }
        }
    }
    for seed in 0..100 {
        let n = 9 + (seed as usize % 4);
        let g = random_graph(n, Rational::new(2, 5).unwrap(), seed).unwrap();
        match oracles::naive_circumference(&g) {
            None => assert!(longest_cycle(&g).is_err()),
            Some(len) => assert_eq!(longest_cycle(&g).unwrap().circumference, len),
        }
    }
}

#[test]
fn hamiltonian_graphs_have_spanning_circumference() {
    for n in 3..=7 {
        for g in connected_graphs(n) {
            if hamiltonian_cycle(&g).is_some() {
                assert_eq!(longest_cycle(&g).unwrap().circumference, n);
            }
        }
    }
}

#[test]
fn toughness_threshold_is_sharp_on_small_graphs() {
    for n in 3..=7 {
        for g in connected_graphs(n) {
            let result = toughness_exact(&g);
            match result.value {
                ToughnessValue::Infinite => assert!(g.is_complete()),
                ToughnessValue::Finite(tau) => {
                    assert!(is_t_tough(&g, tau).unwrap().holds());
                    let eps = Rational::new(1, (n * n) as i64).unwrap();
                    assert!(!is_t_tough(&g, tau.add(&eps)).unwrap().holds());
                }
            }
        }
    }
}

#[test]
fn toughness_never_drops_when_an_edge_is_added() {
    let mut checked = 0;
    for seed in 0..120u64 {
        let n = 5 + (seed as usize % 4);
        let g = random_graph(n, Rational::new(1, 2).unwrap(), seed).unwrap();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let Some(&(u, v)) = missing.first() else {
            continue;
        };
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.push((u, v));
        let bigger = Graph::from_edges(n, &edges).unwrap();
        let before = toughness_exact(&g).value;
        let after = toughness_exact(&bigger).value;
        match (before, after) {
            (_, ToughnessValue::Infinite) => {}
            (ToughnessValue::Finite(a), ToughnessValue::Finite(b)) => {
                assert!(b >= a, "seed {seed}: {a} dropped to {b}");
            }
            (ToughnessValue::Infinite, ToughnessValue::Finite(_)) => {
                panic!("adding an edge cannot make a complete graph incomplete")
            }
        }
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn subset_scan_guard_is_reported() {
    // just over the documented limit: the scanning checks bow out politely
    let n = SUBSET_SCAN_LIMIT + 1;
    let g = Graph::empty(n);
    let report = toughham_core::claims::check_trivial_components(&g);
    assert_eq!(report.verdict, toughham_core::Verdict::HypothesesNotMet);
    assert!(report.note.unwrap().contains("limit"));
}
