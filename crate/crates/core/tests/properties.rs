mod common;

use cmgraph_core::complex::{is_shellable, verify_shelling_order, DEFAULT_SHELLING_BUDGET};
use cmgraph_core::graph::{
    all_r_partitions, canonical_form, chromatic_number, clique_number, cliques_of_size,
    independence_number, is_perfect, is_unmixed, maximal_independent_sets, r_partition,
};
use cmgraph_core::{
    basic_clique_cover, boundary_matrices, class_g_membership, cm_graph, independence_complex,
    perfect_r_matchings, reduced_betti, FieldSpec, Graph, ShellingOutcome, VertexSet,
};
use common::*;
use proptest::prelude::*;

fn graph_on(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_on(max_n).prop_flat_map(|g| {
        let perm = Just((1..=g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph_on(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn maximal_independent_sets_match_brute_force(g in graph_on(9)) {
        let mis = maximal_independent_sets(&g);
        prop_assert_eq!(to_vecs(&mis), brute_maximal_independent_sets(&g));
        // complements are exactly the minimal vertex covers
        for s in &mis {
            let cover = g.vertices() - *s;
            prop_assert!(g.edges().iter().all(|&(u, v)| cover.contains(u) || cover.contains(v)));
            for v in cover {
                let smaller = cover.without(v);
                prop_assert!(g.edges().iter().any(|&(a, b)| !smaller.contains(a) && !smaller.contains(b)));
            }
        }
        let sizes: Vec<usize> = mis.iter().map(|s| s.len()).collect();
        prop_assert_eq!(is_unmixed(&g), sizes.iter().all(|&k| k == sizes[0]));
        prop_assert_eq!(independence_number(&g), *sizes.iter().max().unwrap());
    }

    #[test]
    fn clique_and_chromatic_numbers_match_brute_force(g in graph_on(7)) {
        prop_assert_eq!(clique_number(&g), brute_clique_number(&g));
        prop_assert_eq!(chromatic_number(&g), brute_chromatic_number(&g));
    }

    #[test]
    fn perfectness_matches_definition(g in graph_on(7)) {
        prop_assert_eq!(is_perfect(&g), brute_is_perfect(&g));
    }

    #[test]
    fn canonical_form_is_a_complete_invariant((g, perm) in graph_and_permutation(10)) {
        let h = permute(&g, &perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn equal_canonical_forms_mean_isomorphic(a in graph_on(6), b in graph_on(6)) {
        if a.n() == b.n() {
            let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
            prop_assert_eq!(same, brute_isomorphic(&a, &b));
        }
    }

    #[test]
    fn r_partitions_are_valid(g in graph_on(8), r in 1usize..5) {
        let all = all_r_partitions(&g, r);
        match r_partition(&g, r) {
            None => prop_assert!(all.is_empty()),
            Some(p) => prop_assert!(all.contains(&p)),
        }
        for p in &all {
            prop_assert_eq!(p.len(), r);
            let union = p.blocks().iter().fold(VertexSet::EMPTY, |a, &b| {
                assert!(a.is_disjoint(b));
                a | b
            });
            prop_assert_eq!(union, g.vertices());
            prop_assert!(p.blocks().iter().all(|&b| !b.is_empty() && g.is_independent(b)));
        }
        prop_assert_eq!(all.is_empty(), r > g.n() || chromatic_number(&g) > r);
    }

    #[test]
    fn basic_cover_invariants(g in graph_on(8), picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        // an arbitrary list of cliques, completed to a cover by singletons
        let pool = cmgraph_core::graph::maximal_cliques(&g);
        let mut cover: Vec<VertexSet> = picks.iter().map(|i| *i.get(&pool)).collect();
        cover.extend(g.vertices().iter().map(VertexSet::singleton));
        let basic = basic_clique_cover(&g, &cover).unwrap();
        prop_assert_eq!(basic.cliques.len() + basic.dropped_empty, cover.len());
        let mut seen = VertexSet::EMPTY;
        for &q in &basic.cliques {
            prop_assert!(!q.is_empty() && g.is_clique(q) && q.is_disjoint(seen));
            seen |= q;
        }
        prop_assert_eq!(seen, g.vertices());
    }

    #[test]
    fn perfect_matchings_match_brute_force(g in graph_on(8), r in 1usize..4) {
        let found = perfect_r_matchings(&g, r, None);
        for m in &found {
            prop_assert!(m.is_valid(&g) && m.is_perfect(&g));
        }
        // brute force: sets of disjoint r-cliques covering everything
        let cliques = cliques_of_size(&g, r);
        let expected = if g.n() % r != 0 {
            0
        } else {
            let k = g.n() / r;
            (0u64..1 << cliques.len())
                .filter(|m| m.count_ones() as usize == k)
                .filter(|&m| {
                    let chosen: Vec<VertexSet> =
                        (0..cliques.len()).filter(|i| m >> i & 1 == 1).map(|i| cliques[i]).collect();
                    chosen.iter().fold(VertexSet::EMPTY, |a, &b| a | b) == g.vertices()
                })
                .count()
        };
        prop_assert_eq!(found.len(), expected);
    }

    #[test]
    fn class_g_covers_use_alpha_cliques(g in graph_on(9)) {
        if let Some(cover) = class_g_membership(&g) {
            prop_assert_eq!(cover.len(), independence_number(&g));
            let union = cover.cliques().iter().fold(VertexSet::EMPTY, |a, &b| a | b);
            prop_assert_eq!(union, g.vertices());
            prop_assert!(cover.cliques().iter().all(|&q| g.is_clique(q)));
        }
    }

    #[test]
    fn class_g_matches_exhaustive_search(g in graph_on(7)) {
        // brute force over assignments of vertices to α labelled cliques
        let alpha = independence_number(&g);
        let n = g.n();
        let mut label = vec![0usize; n];
        let exists = loop {
            let ok = (0..alpha).all(|c| {
                let s: VertexSet = (1..=n).filter(|&v| label[v - 1] == c).collect();
                g.is_clique(s)
            });
            if ok {
                break true;
            }
            let mut i = 0;
            while i < n && label[i] + 1 == alpha {
                label[i] = 0;
                i += 1;
            }
            if i == n {
                break false;
            }
            label[i] += 1;
        };
        prop_assert_eq!(class_g_membership(&g).is_some(), exists);
    }

    #[test]
    fn chain_complex_identities(g in graph_on(9)) {
        let delta = independence_complex(&g);
        let ds = boundary_matrices(&delta);
        for w in ds.windows(2) {
            prop_assert!(w[0].compose(&w[1]).iter().all(|&x| x == 0));
        }
        let chi = delta.f_vector().reduced_euler_characteristic();
        for p in [0, 2, 3] {
            let b = reduced_betti(&delta, FieldSpec::new(p).unwrap());
            prop_assert_eq!(b.alternating_sum(), chi);
        }
    }

    #[test]
    fn betti_numbers_match_smith_form(g in graph_on(8)) {
        let delta = independence_complex(&g);
        let facets = to_vecs(delta.facets());
        for p in [0, 2] {
            prop_assert_eq!(reduced_betti(&delta, FieldSpec::new(p).unwrap()).0, betti_by_snf(&facets, p));
        }
    }

    #[test]
    fn reisner_matches_definition_and_witnesses_are_sound(g in graph_on(7)) {
        let delta = independence_complex(&g);
        let facets = to_vecs(delta.facets());
        for p in [0, 2] {
            let report = cm_graph(&g, FieldSpec::new(p).unwrap());
            prop_assert_eq!(report.is_cm, brute_reisner(&facets, p));
            prop_assert_eq!(report.is_cm, report.witness.is_none());
            if let Some(w) = report.witness {
                let link = brute_link(&facets, &w.face.to_vec());
                let dim = link.iter().map(Vec::len).max().unwrap() as isize - 1;
                prop_assert!(w.index >= -1 && w.index < dim);
                prop_assert!(betti_by_snf(&link, p)[(w.index + 1) as usize] > 0);
            }
            if report.is_cm {
                prop_assert!(is_unmixed(&g));
            }
        }
    }

    #[test]
    fn shelling_search_matches_definition(g in graph_on(8)) {
        let delta = independence_complex(&g);
        if !delta.is_pure() {
            return Ok(());
        }
        let facets = to_vecs(delta.facets());
        match is_shellable(&delta, DEFAULT_SHELLING_BUDGET).unwrap() {
            ShellingOutcome::Shellable(order) => {
                prop_assert!(verify_shelling_order(&order));
                prop_assert!(definitional_shelling(&to_vecs(&order)));
                prop_assert!(cm_graph(&g, FieldSpec::RATIONALS).is_cm);
                prop_assert!(cm_graph(&g, FieldSpec::GF2).is_cm);
            }
            ShellingOutcome::NotShellable => {
                if facets.len() <= 7 {
                    prop_assert!(!brute_shellable(&facets));
                }
            }
            ShellingOutcome::BudgetExhausted => prop_assert!(false, "budget exhausted on a tiny complex"),
        }
    }

    #[test]
    fn exchange_verifier_matches_definition(g in graph_on(7), seed in any::<u64>()) {
        let delta = independence_complex(&g);
        if !delta.is_pure() {
            return Ok(());
        }
        let mut order = delta.facets().to_vec();
        // a seeded rotation-and-swap shuffle keeps this deterministic per case
        let len = order.len();
        for i in 0..len {
            let j = (seed.rotate_left(i as u32 * 7) as usize) % len;
            order.swap(i, j);
        }
        prop_assert_eq!(verify_shelling_order(&order), definitional_shelling(&to_vecs(&order)));
    }
}
