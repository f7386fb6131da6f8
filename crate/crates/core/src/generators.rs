//! Named test graphs and seeded random instance generators.

use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph, NodeWeights};
use crate::lp::mincut::min_cut;
use crate::rational::{int, rat, Rat};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn simple(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    Multigraph::unweighted(n, pairs).expect("generator edges are valid")
}

pub fn k4() -> Multigraph {
    simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k5() -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            pairs.push((u, v));
        }
    }
    simple(5, &pairs)
}

pub fn cycle(n: usize) -> Multigraph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    simple(n, &pairs)
}

/// Generalized Petersen graph GP(k, s): outer k-cycle, spokes, inner star polygon.
pub fn generalized_petersen(k: usize, s: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((i, (i + 1) % k));
    }
    for i in 0..k {
        pairs.push((i, i + k));
    }
    for i in 0..k {
        pairs.push((k + i, k + (i + s) % k));
    }
    simple(2 * k, &pairs)
}

pub fn petersen() -> Multigraph {
    generalized_petersen(5, 2)
}

pub fn mobius_kantor() -> Multigraph {
    generalized_petersen(8, 3)
}

pub fn k33() -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            pairs.push((u, v));
        }
    }
    simple(6, &pairs)
}

/// Triangular prism.
pub fn prism() -> Multigraph {
    simple(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

/// Heawood graph, LCF notation [5,-5]^7.
pub fn heawood() -> Multigraph {
    let mut pairs: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        pairs.push((i, (i + 5) % 14));
    }
    simple(14, &pairs)
}

/// Circulant graph on `n` vertices with the given jumps.
pub fn circulant(n: usize, jumps: &[usize]) -> Multigraph {
    let mut pairs = Vec::new();
    for &j in jumps {
        for i in 0..n {
            pairs.push((i, (i + j) % n));
        }
    }
    simple(n, &pairs)
}

/// 3-dimensional hypercube.
pub fn cube() -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                pairs.push((u, v));
            }
        }
    }
    simple(8, &pairs)
}

/// Two vertices joined by `k` parallel unit edges.
pub fn parallel(k: usize) -> Multigraph {
    simple(2, &vec![(0, 1); k])
}

/// Graph by family name as used on the command line.
pub fn by_name(name: &str) -> Option<Multigraph> {
    Some(match name {
        "k4" => k4(),
        "k5" => k5(),
        "petersen" => petersen(),
        "k33" => k33(),
        "prism" => prism(),
        "heawood" => heawood(),
        "mobius-kantor" => mobius_kantor(),
        "cube" => cube(),
        "c8-1-2" => circulant(8, &[1, 2]),
        _ => return None,
    })
}

pub const FAMILY_NAMES: &[&str] =
    &["k4", "k5", "petersen", "k33", "prism", "heawood", "mobius-kantor", "cube", "c8-1-2"];

fn edge_connectivity_at_least(g: &Multigraph, k: usize) -> bool {
    let cap = vec![Rat::from_integer(1.into()); g.m()];
    match min_cut(g, &cap) {
        Ok((v, _)) => v >= int(k as i64),
        Err(_) => false,
    }
}

/// Random simple cubic 3-edge-connected graph: a Hamiltonian cycle on a random
/// vertex order plus a random perfect matching of chords, resampled until the
/// result is simple and 3-edge-connected.
pub fn random_cubic_3ec(n: usize, seed: u64) -> Result<Multigraph> {
    if n % 2 == 1 || !(4..=20).contains(&n) {
        return Err(Error::Precondition(format!("random cubic graph needs even n in 4..=20, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
        let mut rest: Vec<usize> = (0..n).collect();
        rest.shuffle(&mut rng);
        for c in rest.chunks(2) {
            pairs.push((c[0], c[1]));
        }
        let mut keys: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        keys.sort_unstable();
        keys.dedup();
        if keys.len() != pairs.len() {
            continue;
        }
        let g = simple(n, &keys);
        if edge_connectivity_at_least(&g, 3) {
            return Ok(g);
        }
    }
}

fn random_weight(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

/// Random simple subcubic 2-edge-connected graph with random rational weights:
/// a Hamiltonian cycle on a random order plus a random partial matching of chords.
pub fn random_subcubic_2ec(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::Precondition(format!("random subcubic graph needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut keys: Vec<(usize, usize)> =
        (0..n).map(|i| (order[i].min(order[(i + 1) % n]), order[i].max(order[(i + 1) % n]))).collect();
    let mut rest: Vec<usize> = (0..n).collect();
    rest.shuffle(&mut rng);
    for c in rest.chunks(2) {
        if c.len() == 2 && rng.gen_bool(0.7) {
            let key = (c[0].min(c[1]), c[0].max(c[1]));
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
    }
    keys.sort_unstable();
    let edges = keys
        .into_iter()
        .map(|(u, v)| Edge { u, v, weight: random_weight(&mut rng) })
        .collect();
    Multigraph::new(n, edges)
}

/// Random subcubic 2-edge-connected graph with `n` vertices: a random cubic
/// 3-edge-connected graph on the largest even `c <= n` with `c <= 2n/3 + 2`
/// rounded down, with `n - c` distinct edges subdivided, and random weights.
pub fn random_subdivided_cubic(n: usize, seed: u64) -> Result<Multigraph> {
    if !(5..=20).contains(&n) {
        return Err(Error::Precondition(format!("subdivided cubic graph needs n in 5..=20, got {n}")));
    }
    let mut c = (2 * n / 3 + 2).min(n - 1).max(4);
    c -= c % 2;
    let base = random_cubic_3ec(c, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5bd1_e995));
    let mut ids: Vec<usize> = (0..base.m()).collect();
    ids.shuffle(&mut rng);
    let split: Vec<usize> = ids.into_iter().take(n - c).collect();
    let mut edges = Vec::new();
    let mut next = c;
    for (id, e) in base.edges().iter().enumerate() {
        if split.contains(&id) {
            edges.push(Edge { u: e.u, v: next, weight: random_weight(&mut rng) });
            edges.push(Edge { u: next, v: e.v, weight: random_weight(&mut rng) });
            next += 1;
        } else {
            edges.push(Edge { u: e.u, v: e.v, weight: random_weight(&mut rng) });
        }
    }
    Multigraph::new(n, edges)
}

/// Random positive rational node weights.
pub fn random_node_weights(n: usize, seed: u64) -> NodeWeights {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    NodeWeights::new((0..n).map(|_| random_weight(&mut rng)).collect()).expect("weights are positive")
}
