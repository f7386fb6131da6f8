mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use ucover::approx::{self, Algorithm};
use ucover::classify::{is_connector, is_cycle_cover, is_tour, is_twoec_multigraph, ObjectClass};
use ucover::connector::{bad_tuples, even_2cut_connectors, normalize_connectors_traced, uniform_family};
use ucover::cycle_cover::find_covering_cycle_cover;
use ucover::decomp::{decompose_spanning_trees, ClassContext};
use ucover::generators::{
    random_cubic_3ec, random_node_weights, random_subcubic_2ec, random_subdivided_cubic,
};
use ucover::graph::{bridges, is_connected_spanning, parse_graph, write_graph};
use ucover::lp::subtour::solve_subtour;
use ucover::rational::{fmt_rat, int, parse_rat, rat};
use ucover::uniform::{self, uniform_cover, Certificate, Variant};
use ucover::{EdgeMultiset, EdgeVector, Multigraph, Rat};

fn even_n(lo: usize, hi: usize) -> impl Strategy<Value = usize> {
    (lo / 2..=hi / 2).prop_map(|k| 2 * k)
}

fn combined_on(c: &Certificate, ids: &[usize]) -> Vec<Rat> {
    let v = c.combination.combined(c.graph.m());
    ids.iter().map(|&e| v.get(e).clone()).collect()
}

/// A 2EC spanning subgraph of `g`, found by dropping edges in `order`
/// whenever the rest stays 2-edge-connected.
fn greedy_twoec_subgraph(g: &Multigraph, order: &[usize]) -> EdgeMultiset {
    let mut h = EdgeMultiset::from_ids(0..g.m());
    for &e in order {
        let mut t = h.clone();
        t.remove_one(e);
        if is_connected_spanning(g, &t) && bridges(g, &t).is_empty() {
            h = t;
        }
    }
    h
}

fn edge_order(m: usize, keys: &[u32]) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..m).collect();
    ids.sort_by_key(|&e| (keys[e % keys.len()].wrapping_mul(e as u32 + 1), e));
    ids
}

fn average(m: usize, hs: &[EdgeMultiset]) -> EdgeVector {
    let k = int(hs.len() as i64);
    EdgeVector((0..m).map(|e| int(hs.iter().map(|h| h.mult(e) as i64).sum()) / &k).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
    }

    #[test]
    fn graph_text_round_trips(n in 5usize..=14, seed in any::<u64>()) {
        let g = random_subcubic_2ec(n, seed).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn tours_18_19_verify_and_leave_slack_on_m_edges(n in even_n(4, 14), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let c = uniform_cover(&g, Variant::Tours18_19).unwrap();
        uniform::verify_certificate(&c).unwrap();
        let cc = find_covering_cycle_cover(&g).unwrap();
        for v in combined_on(&c, &cc.m_edges) {
            prop_assert!(v <= rat(6, 19));
        }
        for v in combined_on(&c, &cc.cover.ids().collect::<Vec<_>>()) {
            prop_assert!(v >= rat(15, 19));
        }
    }

    #[test]
    fn twoec_15_17_leaves_slack_on_m_edges(n in even_n(4, 12), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let c = uniform_cover(&g, Variant::Twoec15_17).unwrap();
        let cc = find_covering_cycle_cover(&g).unwrap();
        for v in combined_on(&c, &cc.m_edges) {
            prop_assert!(v <= rat(12, 17));
        }
    }

    #[test]
    fn tour_terms_cross_every_cut_evenly(n in even_n(4, 12), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let c = uniform_cover(&g, Variant::Tours18_19).unwrap();
        for shore in all_shores(g.n()) {
            let cut = cut_of(&g, shore);
            for t in &c.combination.terms {
                let k: u32 = cut.iter().map(|&e| t.edges.mult(e)).sum();
                prop_assert!(k >= 2 && k.is_multiple_of(2));
            }
        }
    }

    #[test]
    fn cycle_cover_meets_small_cuts_twice(n in even_n(4, 14), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let r = find_covering_cycle_cover(&g).unwrap();
        prop_assert!(is_cycle_cover(&g, &r.cover));
        for shore in all_shores(g.n()) {
            let cut = cut_of(&g, shore);
            let k = cut.iter().filter(|&&e| r.cover.mult(e) > 0).count();
            prop_assert!(k % 2 == 0);
            if cut.len() <= 4 {
                prop_assert!(k >= 2);
            }
        }
        let full = EdgeMultiset::from_ids(0..g.m());
        let matched: Vec<usize> = full.ids().filter(|&e| r.cover.mult(e) == 0).collect();
        prop_assert_eq!(matched, r.matching.clone());
    }

    #[test]
    fn subgraph_terms_of_8_9_have_no_doubled_edges(n in even_n(4, 12), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let c = uniform_cover(&g, Variant::Subgraphs8_9).unwrap();
        prop_assert!(c.combination.terms.iter().all(|t| t.edges.max_mult() <= 1));
    }

    #[test]
    fn uniform_families_lose_a_bad_tuple_per_move(
        n in 4usize..=9,
        seed in any::<u64>(),
        mults in proptest::collection::vec(proptest::collection::vec(0u32..3, 24), 2..6),
    ) {
        let g = random_subcubic_2ec(n, seed).unwrap();
        let terms: Vec<EdgeMultiset> = mults
            .iter()
            .map(|ks| EdgeMultiset::from_pairs((0..g.m()).map(|e| (e, ks[e % ks.len()]))))
            .filter(|h| is_connector(&g, h))
            .collect();
        prop_assume!(!terms.is_empty());
        let x = average(g.m(), &terms);
        let cc = uniform_family(terms, x.clone());
        let (out, trace) = normalize_connectors_traced(&cc, g.m());
        prop_assert!(trace.windows(2).all(|w| w[1] < w[0]));
        if let Some(&first) = trace.first() {
            prop_assert_eq!(first, bad_tuples(&cc, g.m()));
        }
        prop_assert_eq!(bad_tuples(&out, g.m()), 0);
        prop_assert_eq!(out.combined(g.m()), x);
        prop_assert!(out.terms.iter().all(|t| is_connector(&g, &t.edges)));
    }

    #[test]
    fn even_connectors_on_averaged_twoec_points(
        n in 5usize..=12,
        seed in any::<u64>(),
        keys in proptest::collection::vec(proptest::collection::vec(any::<u32>(), 8), 1..4),
    ) {
        let g = match n % 3 {
            0 => random_subdivided_cubic(n, seed).unwrap(),
            1 => random_subcubic_2ec(n, seed).unwrap(),
            _ => perturbed_petersen(seed),
        };
        let hs: Vec<EdgeMultiset> = keys.iter().map(|k| greedy_twoec_subgraph(&g, &edge_order(g.m(), k))).collect();
        let x = average(g.m(), &hs);
        let r = even_2cut_connectors(&g, &x).unwrap();
        r.combination.verify(&g, &ClassContext::None).unwrap();
        prop_assert_eq!(r.combination.lambda_sum(), Rat::one());
        prop_assert!(x.dominates(&r.combination.combined(g.m())));
        for t in &r.combination.terms {
            prop_assert!(is_connector(&g, &t.edges));
            for e in 0..g.m() {
                if *x.get(e) < Rat::one() {
                    prop_assert!(t.edges.mult(e) < 2);
                }
            }
        }
        for cut in cuts_sized(&g, 2, 2) {
            for t in &r.combination.terms {
                let k: u32 = cut.iter().map(|&e| t.edges.mult(e)).sum();
                prop_assert!(k.is_multiple_of(2));
            }
        }
    }

    #[test]
    fn even_connectors_on_fractional_lp_optima(seed in any::<u64>()) {
        let g = perturbed_petersen(seed);
        let lp = solve_subtour(&g).unwrap();
        prop_assert!(lp.x.values().iter().any(|v| !v.is_integer()));
        let r = even_2cut_connectors(&g, &lp.x).unwrap();
        prop_assert!(lp.x.dominates(&r.combination.combined(g.m())));
        for cut in cuts_sized(&g, 2, 2) {
            for t in &r.combination.terms {
                let k: u32 = cut.iter().map(|&e| t.edges.mult(e)).sum();
                prop_assert!(k.is_multiple_of(2));
            }
        }
    }

    #[test]
    fn spanning_trees_of_the_lp_optimum_verify(n in 5usize..=10, seed in any::<u64>()) {
        let g = random_subcubic_2ec(n, seed).unwrap();
        let lp = solve_subtour(&g).unwrap();
        let cc = decompose_spanning_trees(&g, &lp.x).unwrap();
        cc.verify(&g, &ClassContext::None).unwrap();
        prop_assert!(cc.len() <= g.m() + 1);
        prop_assert!(cc.terms.iter().all(|t| t.class == ObjectClass::SpanningTree));
    }

    #[test]
    fn node_weighted_results_classify_and_verify(n in even_n(4, 12), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let f = random_node_weights(n, seed ^ 0x5eed);
        let g = g.with_node_weights(&f).unwrap();
        for alg in [Algorithm::Tsp75, Algorithm::Twoec1310] {
            let r = approx::run(alg, &g, Some(&f)).unwrap();
            approx::verify_approx(&r).unwrap();
            prop_assert_eq!(&r.z_g, &(int(2) * f.total()));
            match alg {
                Algorithm::Tsp75 => prop_assert!(is_tour(&g, &r.solution)),
                _ => prop_assert!(is_twoec_multigraph(&g, &r.solution)),
            }
        }
    }

    #[test]
    fn perfect_matchings_and_cycle_covers_have_fixed_weight(n in even_n(4, 12), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        let f = random_node_weights(n, seed.rotate_left(7));
        let g = g.with_node_weights(&f).unwrap();
        let z = int(2) * f.total();
        for c in all_two_factors(&g) {
            prop_assert_eq!(mask_to_multiset(c).weight(&g), z.clone());
        }
        for pm in all_perfect_matchings(&g) {
            prop_assert_eq!(mask_to_multiset(pm).weight(&g), &z / int(2));
        }
    }

    #[test]
    fn beta_algorithms_meet_their_guarantees(n in 5usize..=10, seed in any::<u64>()) {
        let g = random_subcubic_2ec(n, seed).unwrap();
        for alg in [Algorithm::Twoecbeta, Algorithm::Tspbeta] {
            let r = approx::run(alg, &g, None).unwrap();
            approx::verify_approx(&r).unwrap();
            prop_assert!(r.weight <= &r.guarantee * &r.z_g);
            let beta = g.total_weight() / &r.z_g;
            prop_assert_eq!(r.beta.as_ref(), Some(&beta));
        }
    }

    #[test]
    fn certificates_round_trip_through_json(n in even_n(4, 10), seed in any::<u64>()) {
        let g = random_cubic_3ec(n, seed).unwrap();
        for v in [Variant::Tours18_19, Variant::Twoec15_17, Variant::Subgraphs8_9] {
            let c = uniform_cover(&g, v).unwrap();
            let back: Certificate = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
            prop_assert_eq!(back, c);
        }
    }

    #[test]
    fn lp_and_approx_results_round_trip_through_json(n in 5usize..=9, seed in any::<u64>()) {
        let g = random_subcubic_2ec(n, seed).unwrap();
        let lp = solve_subtour(&g).unwrap();
        let back: ucover::lp::subtour::LpResult = serde_json::from_str(&serde_json::to_string(&lp).unwrap()).unwrap();
        prop_assert_eq!(back, lp);
        let r = approx::run(Algorithm::Tspbeta, &g, None).unwrap();
        let back: approx::ApproxResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn twelve_thirteenths_certificates_also_certify_eighteen_nineteenths() {
    for name in ["k33", "cube", "heawood", "mobius-kantor"] {
        let g = ucover::generators::by_name(name).unwrap();
        let mut c = uniform_cover(&g, Variant::Tours12_13).unwrap();
        let alpha = Variant::Tours18_19.alpha();
        let combined = c.combination.combined(g.m());
        c.variant = Variant::Tours18_19;
        c.profile = Variant::Tours18_19.profile();
        c.alpha = alpha.clone();
        c.combination.target = EdgeVector::everywhere(g.m(), alpha.clone());
        c.slack = EdgeVector((0..g.m()).map(|e| &alpha - combined.get(e)).collect());
        uniform::verify_certificate(&c).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn seven_eighths_certificates_also_certify_fifteen_seventeenths() {
    let g = ucover::generators::by_name("k33").unwrap();
    let mut c = uniform_cover(&g, Variant::Twoec7_8).unwrap();
    let alpha = Variant::Twoec15_17.alpha();
    let combined = c.combination.combined(g.m());
    c.variant = Variant::Twoec15_17;
    c.profile = Variant::Twoec15_17.profile();
    c.alpha = alpha.clone();
    c.combination.target = EdgeVector::everywhere(g.m(), alpha.clone());
    c.slack = EdgeVector((0..g.m()).map(|e| &alpha - combined.get(e)).collect());
    uniform::verify_certificate(&c).unwrap();
}

#[test]
fn everywhere_two_thirds_is_optimal_on_node_weighted_cubic_graphs() {
    for seed in 0..6 {
        let g = random_cubic_3ec(10, seed).unwrap();
        let f = random_node_weights(10, seed);
        let g = g.with_node_weights(&f).unwrap();
        let lp = solve_subtour(&g).unwrap();
        assert_eq!(lp.value, int(2) * f.total());
        assert_eq!(EdgeVector::everywhere(g.m(), rat(2, 3)).dot(&g.weights()), lp.value);
        assert!(lp.x.values().iter().all(|v| *v >= Rat::zero()));
    }
}
