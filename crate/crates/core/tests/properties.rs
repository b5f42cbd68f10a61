use proptest::prelude::*;

use indminor::catalog::canonical_form;
use indminor::cwx::{self, CwExpression};
use indminor::gen;
use indminor::graph::io::{from_graph6, to_graph6};
use indminor::iso::{cograph_certificate, general_iso};
use indminor::oracles::iso_bruteforce;
use indminor::reductions;
use indminor::structure::k3uk1_induced_minor_free;
use indminor::{ColoredGraph, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, p) in arb_graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) })) {
        let h = g.permute(&p);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(iso_bruteforce(&(&g).into(), &(&h).into()).unwrap().unwrap().is_isomorphism(&(&g).into(), &(&h).into()));
    }

    #[test]
    fn general_engine_matches_oracle(a in arb_graph(8), b in arb_graph(8)) {
        let (a, b): (ColoredGraph, ColoredGraph) = ((&a).into(), (&b).into());
        prop_assert_eq!(general_iso(&a, &b).unwrap(), iso_bruteforce(&a, &b).unwrap().is_some());
    }

    #[test]
    fn expressions_survive_text(seed in any::<u64>(), n in 1usize..30) {
        let g = gen::random_cograph(n, &mut gen::rng(seed));
        let e = cwx::cograph_expression(&g).unwrap();
        let back: CwExpression = e.to_string().parse().unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert!(cwx::verify(&back, &g));
        prop_assert!(e.width() <= 2);
    }

    #[test]
    fn cograph_certificates_are_invariants(seed in any::<u64>(), n in 1usize..25) {
        let mut r = gen::rng(seed);
        let g = gen::random_cograph(n, &mut r);
        let h = g.permute(&gen::random_permutation(n, &mut r));
        prop_assert_eq!(cograph_certificate(&(&g).into()).unwrap(), cograph_certificate(&(&h).into()).unwrap());
    }

    #[test]
    fn apex_width_bound(seed in any::<u64>(), rest in 2usize..9, t in 0usize..5) {
        let mut r = gen::rng(seed);
        let base = gen::random_cograph(rest, &mut r);
        let n = rest + t;
        let extra = gen::random_gnp(n, 0.5, &mut r);
        let mut edges: Vec<_> = base.edges().collect();
        edges.extend(extra.edges().filter(|&(_, v)| v >= rest));
        let g = Graph::from_edges(n, edges).unwrap();
        let s: Vec<usize> = (rest..n).collect();
        let kept: Vec<usize> = (0..rest).collect();
        let e = cwx::cograph_expression_on(&g, &kept).unwrap();
        let out = cwx::compose_apex(&e, &g, &s).unwrap();
        prop_assert!(cwx::verify(&out, &g));
        prop_assert!(out.width() <= (1 << t) * (e.width() + 1) - 1);
    }

    #[test]
    fn gem_free_expressions_verify(seed in any::<u64>(), n in 3usize..12) {
        let g = gen::gemfree_suture(n, &mut gen::rng(seed)).unwrap();
        let e = cwx::gem_free_expression(&g).unwrap();
        prop_assert!(cwx::verify(&e, &g));
        prop_assert!(e.width() <= cwx::W_GEM);
    }

    #[test]
    fn k3uk1_reduction_lands_in_class(seed in any::<u64>(), n in 4usize..9) {
        let g = gen::random_min_degree(n, 3, &mut gen::rng(seed));
        let r = reductions::reduce_to_k3uk1_free(&g).unwrap();
        prop_assert_eq!(r.graph.n(), n + 3 * g.m());
        prop_assert!(k3uk1_induced_minor_free(&r.graph));
    }

    #[test]
    fn split_and_cobipartite_certificates(g in arb_graph(9)) {
        prop_assume!(g.m() > 0);
        let s = reductions::reduce_to_restricted_split(&g).unwrap();
        prop_assert!(reductions::check_restricted_split(&s.graph, &reductions::restricted_split_certificate(&s)));
        let c = reductions::reduce_to_cobipartite(&g).unwrap();
        prop_assert!(reductions::check_two_cliques(&c.graph, &c.originals(), &c.subdivisions()));
    }
}
