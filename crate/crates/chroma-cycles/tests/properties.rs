//! Randomized invariant checks across the library.

use proptest::prelude::*;

use chroma_cycles::cert::{canonical_cycle, CyclicPerm};
use chroma_cycles::coloring::{find_k_coloring, find_kd_coloring, CircularSpec, Coloring};
use chroma_cycles::graph::{Edge, Graph};
use chroma_cycles::graph6::{parse_graph6, write_graph6};
use chroma_cycles::oracle;
use chroma_cycles::tuza::shift_recolor;

/// Random graph on `n` vertices from an edge bitmask.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut g = Graph::empty(n).unwrap();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_roundtrip(g in graph_strategy(20)) {
        let enc = write_graph6(&g);
        let back = parse_graph6(&enc).unwrap();
        prop_assert_eq!(&back, &g);
        // String-level identity: re-encoding the parse reproduces the line.
        prop_assert_eq!(write_graph6(&back), enc);
    }

    #[test]
    fn solver_colorings_are_valid_and_minimal_on_small_graphs(g in graph_strategy(6)) {
        let chi = chroma_cycles::coloring::chromatic_number(&g);
        let c = find_k_coloring(&g, chi).unwrap();
        prop_assert!(c.is_valid_on(&g));
        if chi > 1 {
            prop_assert!(find_k_coloring(&g, chi - 1).is_none());
        }
    }

    #[test]
    fn cycle_enumeration_emits_unique_canonical_forms(g in graph_strategy(8)) {
        let cycles = oracle::enumerate_cycles(&g, None, None);
        let mut seen = std::collections::BTreeSet::new();
        for c in &cycles {
            prop_assert_eq!(&canonical_cycle(c), c);
            prop_assert!(seen.insert(c.clone()));
        }
    }

    #[test]
    fn through_edge_profiles_cover_each_cycle_once_per_edge(g in graph_strategy(7)) {
        let census = oracle::edge_residue_census(&g, 3, None).unwrap();
        let mut weighted = vec![0u64; 3];
        oracle::for_each_cycle(&g, None, None, |c| {
            weighted[c.len() % 3] += c.len() as u64;
            true
        });
        for residue in 0..3 {
            let across: u64 = census.per_edge.values().map(|p| p.counts[residue]).sum();
            prop_assert_eq!(across, weighted[residue]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Shift recoloring keeps the coloring proper on g - e for arbitrary
    /// anchored permutations, and proper on all of g when the far endpoint
    /// is unreachable.
    #[test]
    fn shift_recolor_stays_proper(
        g in graph_strategy(9),
        edge_pick in any::<proptest::sample::Index>(),
        subset_seed in any::<u64>(),
    ) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let e = edges[edge_pick.index(edges.len())];
        let k = (g.max_degree() + 1).max(2);
        let del = g.edge_deleted(e).unwrap();
        let phi = find_k_coloring(&del, k).expect("max degree + 1 colors always suffice");

        // Derive a pseudo-random anchored permutation from the seed.
        let anchor = phi.color(e.u());
        let mut others: Vec<usize> = (1..=k).filter(|&c| c != anchor).collect();
        let mut state = subset_seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let r = 2 + (next() as usize) % k.min(others.len() + 1).saturating_sub(1).max(1);
        let r = r.min(k);
        let mut support = vec![anchor];
        for _ in 1..r {
            let i = (next() as usize) % others.len();
            support.push(others.swap_remove(i));
        }
        let sigma = CyclicPerm::new(support).unwrap();

        let (reach, shifted) = shift_recolor(&g, e, &phi, &sigma).unwrap();
        prop_assert!(shifted.is_valid_on(&del));
        if reach & (1 << e.v()) == 0 && phi.color(e.u()) == phi.color(e.v()) {
            prop_assert!(shifted.is_valid_on(&g));
        }
    }

    /// Rotating all colors of a valid circular coloring preserves validity.
    #[test]
    fn rotation_preserves_circular_validity(
        g in graph_strategy(8),
        spec_pick in 0usize..5,
        t in 0usize..9,
    ) {
        let (k, d) = [(5, 2), (7, 2), (7, 3), (8, 3), (9, 4)][spec_pick];
        let spec = CircularSpec::new(k, d).unwrap();
        let Some(phi) = find_kd_coloring(&g, spec) else {
            return Ok(());
        };
        prop_assert!(phi.is_valid_on(&g));
        let rotated = phi.rotated(t % k);
        prop_assert!(rotated.is_valid_on(&g));
        let mirrored = phi.mirrored();
        prop_assert!(mirrored.is_valid_on(&g));
    }
}

#[test]
fn kd_coloring_matches_homomorphism_feasibility() {
    // Spot equivalence between the Z_k reformulation and the raw
    // homomorphism search on a fixed fan of graphs.
    use chroma_cycles::coloring::find_homomorphism;
    use chroma_cycles::graph::{circular_clique, make_named};
    let graphs = [
        make_named("cycle", &[3]).unwrap(),
        make_named("cycle", &[5]).unwrap(),
        make_named("cycle", &[7]).unwrap(),
        make_named("petersen", &[]).unwrap(),
        make_named("complete", &[4]).unwrap(),
        make_named("grotzsch", &[]).unwrap(),
    ];
    for g in &graphs {
        for (k, d) in [(5, 2), (7, 3), (7, 2), (8, 3), (9, 4)] {
            let spec = CircularSpec::new(k, d).unwrap();
            let direct = find_homomorphism(g, &circular_clique(k, d).unwrap());
            let viakd: Option<Coloring> = find_kd_coloring(g, spec);
            assert_eq!(direct.is_some(), viakd.is_some(), "({k},{d}) on {g:?}");
            if let Some(c) = viakd {
                assert!(c.is_valid_on(g));
            }
        }
    }
}

#[test]
fn graph6_identity_on_named_corpus() {
    use chroma_cycles::graph::make_named;
    let corpus = [
        ("complete", vec![5]),
        ("cycle", vec![9]),
        ("path", vec![6]),
        ("complete_bipartite", vec![3, 3]),
        ("wheel", vec![7]),
        ("petersen", vec![]),
        ("circular_clique", vec![9, 4]),
        ("grotzsch", vec![]),
        ("toft", vec![]),
    ];
    for (name, params) in corpus {
        let g = make_named(name, &params).unwrap();
        let enc = write_graph6(&g);
        assert_eq!(parse_graph6(&enc).unwrap(), g, "roundtrip of {name}");
    }
}

#[test]
fn edge_deletion_reduces_edge_count_by_one() {
    let g = chroma_cycles::graph::petersen();
    for e in g.edges() {
        let del = g.edge_deleted(e).unwrap();
        assert_eq!(del.edge_count(), g.edge_count() - 1);
        let _ = Edge::new(e.u(), e.v());
    }
}
