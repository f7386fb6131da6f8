//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.

mod common;

use common::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use ucover::approx::{self, Algorithm, ApproxResult};
use ucover::classify::{is_connector, is_tjoin, is_tour, is_twoec_multigraph};
use ucover::connector::even_2cut_connectors;
use ucover::cycle_cover::find_covering_cycle_cover;
use ucover::decomp::min_tjoin;
use ucover::generators::{self, random_cubic_3ec, random_node_weights, random_subcubic_2ec, random_subdivided_cubic};
use ucover::lp::subtour::solve_subtour;
use ucover::rational::{fmt_rat, int, rat};
use ucover::uniform::{self, uniform_cover, Certificate, Variant};
use ucover::{Multigraph, NodeWeights, Rat};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn named(name: &str) -> Multigraph {
    generators::by_name(name).unwrap()
}

fn certificate_runs() -> Vec<(String, Variant, Multigraph)> {
    let mut runs = Vec::new();
    for name in ["k4", "petersen", "prism"] {
        runs.push((name.to_string(), Variant::Tours18_19, named(name)));
    }
    for seed in 0..20u64 {
        let n = 4 + 2 * (seed as usize % 6);
        runs.push((format!("random-cubic-3ec({n},{seed})"), Variant::Tours18_19, random_cubic_3ec(n, seed).unwrap()));
    }
    for name in ["k33", "heawood", "mobius-kantor"] {
        runs.push((name.to_string(), Variant::Tours12_13, named(name)));
        runs.push((name.to_string(), Variant::Twoec7_8, named(name)));
    }
    for name in ["k4", "petersen"] {
        runs.push((name.to_string(), Variant::Twoec15_17, named(name)));
        runs.push((name.to_string(), Variant::Subgraphs8_9, named(name)));
    }
    for name in ["k5", "c8-1-2"] {
        runs.push((name.to_string(), Variant::Subgraphs3_4, named(name)));
    }
    runs
}

fn check_certificate(c: &Certificate) -> Result<(), String> {
    let m = c.graph.m();
    ensure!(c.combination.lambda_sum() == Rat::one(), "lambda sum {}", fmt_rat(&c.combination.lambda_sum()));
    ensure!(c.combination.terms.iter().all(|t| t.lambda > Rat::zero()), "nonpositive coefficient");
    let combined = c.combination.combined(m);
    for e in 0..m {
        let slack = &c.alpha - combined.get(e);
        ensure!(slack >= Rat::zero(), "edge {e} has slack {}", fmt_rat(&slack));
        ensure!(&slack == c.slack.get(e), "edge {e} slack field differs");
    }
    for t in &c.combination.terms {
        let ok = match c.variant {
            Variant::Tours18_19 | Variant::Tours12_13 => is_tour(&c.graph, &t.edges),
            Variant::Twoec15_17 | Variant::Twoec7_8 => is_twoec_multigraph(&c.graph, &t.edges),
            Variant::Subgraphs8_9 | Variant::Subgraphs3_4 => {
                is_twoec_multigraph(&c.graph, &t.edges) && t.edges.max_mult() <= 1
            }
        };
        ensure!(ok, "term fails the {} classifier", c.class.name());
    }
    uniform::verify_certificate(c).map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let runs = certificate_runs();
    let mut slowest = Duration::ZERO;
    for (name, v, g) in &runs {
        let start = Instant::now();
        let c = uniform_cover(g, *v).map_err(|e| format!("{v} on {name}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        check_certificate(&c).map_err(|e| format!("{v} on {name}: {e}"))?;
        ensure!(took < Duration::from_secs(60), "{v} on {name} took {took:?}");
    }
    Ok(format!("{} certificates, slowest {:.3}s", runs.len(), slowest.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let mut graphs = vec![("k4".to_string(), named("k4")), ("petersen".to_string(), named("petersen"))];
    for seed in 0..5 {
        graphs.push((format!("random-cubic-3ec(10,{seed})"), random_cubic_3ec(10, seed).unwrap()));
    }
    let mut terms = 0;
    for (name, g) in &graphs {
        let c = uniform_cover(g, Variant::Subgraphs8_9).map_err(|e| format!("{name}: {e}"))?;
        for t in &c.combination.terms {
            ensure!(t.edges.max_mult() <= 1, "{name}: doubled edge in an 8/9 term");
        }
        terms += c.combination.len();
    }
    Ok(format!("{terms} terms over {} graphs, none doubled", graphs.len()))
}

fn criterion_3() -> Outcome {
    let mut fractional = 0;
    let mut cuts_checked = 0;
    for i in 0..50u64 {
        let n = 5 + (i as usize % 8);
        let g = match i % 4 {
            1 => random_subcubic_2ec(n, 1000 + i).map_err(|e| format!("instance {i}: {e}"))?,
            3 => random_subdivided_cubic(n, 1000 + i).map_err(|e| format!("instance {i}: {e}"))?,
            _ => perturbed_petersen(1000 + i),
        };
        let lp = solve_subtour(&g).map_err(|e| format!("instance {i}: {e}"))?;
        if lp.x.values().iter().any(|v| !v.is_integer()) {
            fractional += 1;
        }
        let r = even_2cut_connectors(&g, &lp.x).map_err(|e| format!("instance {i}: {e}"))?;
        ensure!(r.combination.lambda_sum() == Rat::one(), "instance {i}: lambda sum");
        ensure!(lp.x.dominates(&r.combination.combined(g.m())), "instance {i}: x* does not dominate");
        for t in &r.combination.terms {
            ensure!(is_connector(&g, &t.edges), "instance {i}: term is not a connector");
        }
        for cut in cuts_sized(&g, 2, 2) {
            for t in &r.combination.terms {
                let k: u32 = cut.iter().map(|&e| t.edges.mult(e)).sum();
                ensure!(k.is_multiple_of(2), "instance {i}: odd crossing of 2-cut {cut:?}");
            }
            cuts_checked += 1;
        }
    }
    Ok(format!("50 instances ({fractional} with fractional x*), {cuts_checked} 2-edge cuts checked"))
}

fn node_weighted_instance(i: u64) -> (Multigraph, NodeWeights) {
    let n = 4 + 2 * (i as usize % 6);
    let g = random_cubic_3ec(n, 2000 + i).unwrap();
    let f = random_node_weights(n, 3000 + i);
    (g.with_node_weights(&f).unwrap(), f)
}

fn check_approx(r: &ApproxResult, bound: &Rat) -> Result<(), String> {
    approx::verify_approx(r).map_err(|e| e.to_string())?;
    ensure!(r.weight == r.solution.weight(&r.graph), "{}: weight field differs", r.algorithm);
    ensure!(r.weight <= bound * &r.z_g, "{}: {} > {} * {}", r.algorithm, fmt_rat(&r.weight), fmt_rat(bound), fmt_rat(&r.z_g));
    let class_ok = match r.algorithm {
        Algorithm::Tsp75 | Algorithm::Bip43 | Algorithm::Tspbeta => is_tour(&r.graph, &r.solution),
        _ => is_twoec_multigraph(&r.graph, &r.solution),
    };
    ensure!(class_ok, "{}: output fails its classifier", r.algorithm);
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut runs = 0;
    for i in 0..20 {
        let (g, f) = node_weighted_instance(i);
        let z = int(2) * f.total();
        for (alg, bound) in [(Algorithm::Tsp75, rat(7, 5)), (Algorithm::Twoec1310, rat(13, 10))] {
            let r = approx::run(alg, &g, Some(&f)).map_err(|e| format!("instance {i} {alg}: {e}"))?;
            ensure!(r.z_g == z, "instance {i}: z_G is not 2 sum f");
            check_approx(&r, &bound).map_err(|e| format!("instance {i}: {e}"))?;
            runs += 1;
        }
    }
    for name in ["k33", "heawood"] {
        let g0 = named(name);
        for f in [NodeWeights::uniform(g0.n(), int(1)).unwrap(), random_node_weights(g0.n(), 7)] {
            let g = g0.with_node_weights(&f).unwrap();
            for (alg, bound) in [(Algorithm::Bip43, rat(4, 3)), (Algorithm::Bip54, rat(5, 4))] {
                let r = approx::run(alg, &g, Some(&f)).map_err(|e| format!("{name} {alg}: {e}"))?;
                check_approx(&r, &bound).map_err(|e| format!("{name}: {e}"))?;
                runs += 1;
            }
        }
    }
    for i in 0..20u64 {
        let n = 5 + (i as usize % 8);
        let g = if i % 2 == 0 { perturbed_petersen(4000 + i) } else { random_subcubic_2ec(n, 4000 + i).unwrap() };
        let z = solve_subtour(&g).map_err(|e| e.to_string())?.value;
        let beta = g.total_weight() / &z;
        let twoec_bound = (int(1) + int(2) * &beta) / int(3);
        let tsp_bound = int(1) + &beta / int(3);
        for (alg, bound) in [(Algorithm::Twoecbeta, twoec_bound), (Algorithm::Tspbeta, tsp_bound)] {
            let r = approx::run(alg, &g, None).map_err(|e| format!("subcubic {i} {alg}: {e}"))?;
            ensure!(r.z_g == z, "subcubic {i}: z_G differs from the LP");
            ensure!(r.guarantee == bound, "subcubic {i} {alg}: guarantee {}", fmt_rat(&r.guarantee));
            check_approx(&r, &bound).map_err(|e| format!("subcubic {i}: {e}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs within their exact bounds"))
}

fn criterion_5() -> Outcome {
    let named_graphs = small_named();
    for (name, g) in &named_graphs {
        let lp = solve_subtour(g).map_err(|e| format!("{name}: {e}"))?;
        let dense = dense_subtour_value(g);
        ensure!(lp.value == dense, "{name}: {} vs oracle {}", fmt_rat(&lp.value), fmt_rat(&dense));
    }
    let corpus = cubic_bridgeless_corpus();
    for (name, g) in &corpus {
        let small = cuts_sized(g, 3, 4);
        let good: Vec<u64> = all_two_factors(g)
            .into_iter()
            .filter(|&c| small.iter().all(|cut| crossing(cut, c) >= 2))
            .collect();
        match find_covering_cycle_cover(g) {
            Ok(r) => {
                let mask = r.cover.ids().fold(0u64, |m, e| m | (1 << e));
                ensure!(good.contains(&mask), "{name}: returned cover is not a valid 2-factor");
            }
            Err(e) => ensure!(good.is_empty(), "{name}: no cover returned but one exists ({e})"),
        }
    }
    let mut joins = 0;
    for g in tjoin_corpus() {
        ensure!(g.m() <= 16, "T-join corpus graph too large");
        for t in terminal_sets(g.n()) {
            let j = min_tjoin(&g, &t).map_err(|e| e.to_string())?;
            ensure!(is_tjoin(&g, &j, &t), "not a T-join for {t:?}");
            let best = exhaustive_min_tjoin(&g, &t);
            ensure!(Some(j.weight(&g)) == best, "T-join weight differs for {t:?}");
            joins += 1;
        }
    }
    Ok(format!(
        "{} LPs, {} cycle-cover instances, {joins} T-joins agree with brute force",
        named_graphs.len(),
        corpus.len()
    ))
}

fn criterion_6() -> Outcome {
    let mut graphs: Vec<(String, Multigraph)> = ["k4", "k33", "prism", "cube", "petersen", "heawood", "mobius-kantor"]
        .into_iter()
        .map(|n| (n.to_string(), named(n)))
        .collect();
    for seed in 0..10 {
        let n = 6 + 2 * (seed as usize % 5);
        graphs.push((format!("random-cubic-3ec({n},{seed})"), random_cubic_3ec(n, seed).unwrap()));
    }
    let (mut covers, mut matchings) = (0, 0);
    for (k, (name, g0)) in graphs.iter().enumerate() {
        let f = random_node_weights(g0.n(), 5000 + k as u64);
        let g = g0.with_node_weights(&f).unwrap();
        let z = int(2) * f.total();
        let lp = solve_subtour(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure!(lp.value == z, "{name}: z_G {} is not 2 sum f {}", fmt_rat(&lp.value), fmt_rat(&z));
        for c in all_two_factors(&g) {
            ensure!(mask_to_multiset(c).weight(&g) == z, "{name}: cycle cover weight differs from z_G");
            covers += 1;
        }
        for pm in all_perfect_matchings(&g) {
            ensure!(mask_to_multiset(pm).weight(&g) == &z / int(2), "{name}: matching weight differs from z_G/2");
            matchings += 1;
        }
    }
    Ok(format!("{} graphs, {covers} cycle covers, {matchings} perfect matchings", graphs.len()))
}

enum Artifact {
    Cert(Box<Certificate>),
    Approx(Box<ApproxResult>),
}

fn nudge(rng: &mut ChaCha8Rng) -> Rat {
    let d = rat(rng.gen_range(1..40), rng.gen_range(2..60));
    if rng.gen_bool(0.5) {
        d
    } else {
        -d
    }
}

fn toggle_edge(rng: &mut ChaCha8Rng, h: &mut ucover::EdgeMultiset, m: usize) {
    let e = rng.gen_range(0..m);
    if h.mult(e) > 0 && rng.gen_bool(0.5) {
        h.remove_one(e);
    } else {
        h.add(e, 1);
    }
}

/// Applies one single-field mutation; returns its label.
fn mutate(rng: &mut ChaCha8Rng, a: &mut Artifact) -> &'static str {
    match a {
        Artifact::Cert(c) => {
            let m = c.graph.m();
            let i = rng.gen_range(0..c.combination.len());
            match rng.gen_range(0..4) {
                0 => {
                    c.combination.terms[i].lambda += nudge(rng);
                    "coefficient"
                }
                1 => {
                    toggle_edge(rng, &mut c.combination.terms[i].edges, m);
                    "edge"
                }
                2 => {
                    c.alpha += nudge(rng);
                    "alpha"
                }
                _ => {
                    let e = rng.gen_range(0..m);
                    let s = c.slack.get(e) + nudge(rng);
                    c.slack.set(e, s);
                    "slack"
                }
            }
        }
        Artifact::Approx(r) => match rng.gen_range(0..4) {
            0 => {
                r.weight += nudge(rng);
                "weight"
            }
            1 => {
                r.z_g += nudge(rng);
                "z_G"
            }
            2 => {
                r.ratio += nudge(rng);
                "ratio"
            }
            _ => {
                toggle_edge(rng, &mut r.solution, r.graph.m());
                "solution edge"
            }
        },
    }
}

fn json(a: &Artifact) -> String {
    match a {
        Artifact::Cert(c) => serde_json::to_string(c).unwrap(),
        Artifact::Approx(r) => serde_json::to_string(r).unwrap(),
    }
}

/// Same path as the command-line verifier: parse the JSON, then re-check.
fn accepted(text: &str, cert: bool) -> bool {
    if cert {
        serde_json::from_str::<Certificate>(text).is_ok_and(|c| uniform::verify_certificate(&c).is_ok())
    } else {
        serde_json::from_str::<ApproxResult>(text).is_ok_and(|r| approx::verify_approx(&r).is_ok())
    }
}

fn criterion_7() -> Outcome {
    let mut base: Vec<Artifact> = [
        (Variant::Tours18_19, "k4"),
        (Variant::Tours18_19, "petersen"),
        (Variant::Tours12_13, "k33"),
        (Variant::Twoec15_17, "k4"),
        (Variant::Twoec7_8, "k33"),
        (Variant::Subgraphs8_9, "petersen"),
        (Variant::Subgraphs3_4, "k5"),
    ]
    .into_iter()
    .map(|(v, n)| Artifact::Cert(Box::new(uniform_cover(&named(n), v).unwrap())))
    .collect();
    let p = named("petersen");
    let f = NodeWeights::uniform(p.n(), int(1)).unwrap();
    let pw = p.with_node_weights(&f).unwrap();
    base.push(Artifact::Approx(Box::new(approx::run(Algorithm::Tsp75, &pw, Some(&f)).unwrap())));
    base.push(Artifact::Approx(Box::new(approx::run(Algorithm::Twoec1310, &pw, Some(&f)).unwrap())));
    let s = random_subcubic_2ec(8, 11).unwrap();
    base.push(Artifact::Approx(Box::new(approx::run(Algorithm::Tspbeta, &s, None).unwrap())));
    base.push(Artifact::Approx(Box::new(approx::run(Algorithm::Twoecbeta, &s, None).unwrap())));

    for a in &base {
        ensure!(accepted(&json(a), matches!(a, Artifact::Cert(_))), "a valid artifact was rejected");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut rejected = 0;
    for k in 0..200 {
        let idx = k % base.len();
        let original = json(&base[idx]);
        let mut a = match &base[idx] {
            Artifact::Cert(c) => Artifact::Cert(c.clone()),
            Artifact::Approx(r) => Artifact::Approx(r.clone()),
        };
        let label = mutate(&mut rng, &mut a);
        let text = json(&a);
        ensure!(text != original, "mutation {k} ({label}) changed nothing");
        if accepted(&text, matches!(a, Artifact::Cert(_))) {
            return Err(format!("mutation {k} ({label}) was accepted"));
        }
        rejected += 1;
    }
    Ok(format!("{rejected}/200 mutations rejected"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("uniform-cover certificates", criterion_1),
        ("8/9 terms are subgraphs", criterion_2),
        ("even 2-cut connector decomposition", criterion_3),
        ("approximation ratios", criterion_4),
        ("oracle equivalences", criterion_5),
        ("node-weighted identities", criterion_6),
        ("mutation robustness", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
