//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's LP, matching or cut code.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use ucover::generators::{self, random_cubic_3ec, random_subcubic_2ec};
use ucover::graph::Edge;
use ucover::rational::{int, rat};
use ucover::{EdgeMultiset, Multigraph, Rat};

/// Every proper nonempty shore containing vertex 0, as a bitmask.
pub fn all_shores(n: usize) -> Vec<u32> {
    (1..(1u32 << n) - 1).filter(|s| s & 1 == 1).collect()
}

pub fn cut_of(g: &Multigraph, shore: u32) -> Vec<usize> {
    (0..g.m())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            ((shore >> u) & 1) != ((shore >> v) & 1)
        })
        .collect()
}

/// All cut edge sets of size in `lo..=hi`, deduplicated.
pub fn cuts_sized(g: &Multigraph, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = all_shores(g.n())
        .into_iter()
        .map(|s| cut_of(g, s))
        .filter(|c| (lo..=hi).contains(&c.len()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Optimum of `min wᵀx, x(δ(S)) ≥ 2 ∀S, x ≥ 0` through its dual
/// `max 2·Σy, Σ_{S∋e} y_S ≤ w_e, y ≥ 0`, by a dense tableau simplex with
/// Bland's rule started from the slack basis.
pub fn dense_subtour_value(g: &Multigraph) -> Rat {
    let shores = all_shores(g.n());
    let m = g.m();
    let k = shores.len();
    let cols = k + m;
    // rows: one per edge; tableau rows [a | slack | rhs]
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|e| {
            let mut row = vec![Rat::zero(); cols + 1];
            for (j, &s) in shores.iter().enumerate() {
                let (u, v) = g.endpoints(e);
                if ((s >> u) & 1) != ((s >> v) & 1) {
                    row[j] = Rat::one();
                }
            }
            row[k + e] = Rat::one();
            row[cols] = g.edge(e).weight.clone();
            row
        })
        .collect();
    // reduced costs for max 2Σy written as min −2Σy
    let mut cost: Vec<Rat> = (0..=cols).map(|j| if j < k { int(-2) } else { Rat::zero() }).collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][cols] / &t[r][enter];
                leave = match leave {
                    None => Some(r),
                    Some(b) => {
                        let rb = &t[b][cols] / &t[b][enter];
                        if ratio < rb || (ratio == rb && basis[r] < basis[b]) {
                            Some(r)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        let r = leave.expect("dual of a feasible subtour LP is bounded");
        let p = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v /= &p;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        let f = cost[enter].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            *v -= &f * pv;
        }
        basis[r] = enter;
    }
    cost[cols].clone()
}

pub fn odd_vertices(g: &Multigraph, set: u64) -> Vec<usize> {
    let mut deg = vec![0u32; g.n()];
    for e in 0..g.m() {
        if (set >> e) & 1 == 1 {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    (0..g.n()).filter(|&v| deg[v] % 2 == 1).collect()
}

/// Minimum T-join weight over all edge subsets.
pub fn exhaustive_min_tjoin(g: &Multigraph, t: &[usize]) -> Option<Rat> {
    assert!(g.m() <= 20);
    let mut t = t.to_vec();
    t.sort_unstable();
    let mut best: Option<Rat> = None;
    for set in 0u64..(1u64 << g.m()) {
        if odd_vertices(g, set) == t {
            let w = (0..g.m()).filter(|&e| (set >> e) & 1 == 1).fold(Rat::zero(), |a, e| a + &g.edge(e).weight);
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
    }
    best
}

/// Every 2-factor of a cubic graph, as edge bitmasks.
pub fn all_two_factors(g: &Multigraph) -> Vec<u64> {
    let m = g.m();
    let full = (1u64 << m) - 1;
    let mut out = Vec::new();
    // complement is a perfect matching: enumerate matchings of size n/2
    fn rec(g: &Multigraph, e: usize, used: u32, chosen: u64, out: &mut Vec<u64>) {
        if used.count_ones() as usize == g.n() {
            out.push(chosen);
            return;
        }
        if e == g.m() {
            return;
        }
        let (u, v) = g.endpoints(e);
        if u != v && (used >> u) & 1 == 0 && (used >> v) & 1 == 0 {
            rec(g, e + 1, used | (1 << u) | (1 << v), chosen | (1 << e), out);
        }
        rec(g, e + 1, used, chosen, out);
    }
    let mut pms = Vec::new();
    rec(g, 0, 0, 0, &mut pms);
    for pm in pms {
        out.push(full & !pm);
    }
    out
}

pub fn all_perfect_matchings(g: &Multigraph) -> Vec<u64> {
    let full = (1u64 << g.m()) - 1;
    all_two_factors(g).into_iter().map(|c| full & !c).collect()
}

pub fn mask_to_multiset(mask: u64) -> EdgeMultiset {
    EdgeMultiset::from_ids((0..64).filter(|&e| (mask >> e) & 1 == 1))
}

pub fn crossing(cut: &[usize], mask: u64) -> usize {
    cut.iter().filter(|&&e| (mask >> e) & 1 == 1).count()
}

/// Cubic bridgeless graph: `k` copies of K4 minus an edge joined in a ring.
pub fn diamond_ring(k: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..k {
        let b = 4 * i;
        pairs.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
        let next = 4 * ((i + 1) % k);
        pairs.push((b + 3, next));
    }
    Multigraph::unweighted(4 * k, &pairs).unwrap()
}

pub fn with_unit_weights(g: &Multigraph) -> Multigraph {
    let edges = g.edges().iter().map(|e| Edge { u: e.u, v: e.v, weight: Rat::one() }).collect();
    Multigraph::new(g.n(), edges).unwrap()
}

pub fn half() -> Rat {
    rat(1, 2)
}

/// Named graphs with at most eight vertices, plus short cycles.
pub fn small_named() -> Vec<(String, Multigraph)> {
    ["k4", "k5", "k33", "prism", "cube", "c8-1-2"]
        .into_iter()
        .map(|n| (n.to_string(), generators::by_name(n).unwrap()))
        .chain((3..=8).map(|k| (format!("cycle-{k}"), generators::cycle(k))))
        .collect()
}

/// Cubic bridgeless graphs with at most twelve vertices.
pub fn cubic_bridgeless_corpus() -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = ["k4", "k33", "prism", "cube", "petersen"]
        .into_iter()
        .map(|n| (n.to_string(), generators::by_name(n).unwrap()))
        .collect();
    out.push(("diamond-ring-2".into(), diamond_ring(2)));
    out.push(("diamond-ring-3".into(), diamond_ring(3)));
    for n in [6, 8, 10, 12] {
        for seed in 0..4 {
            out.push((format!("random-cubic-{n}-{seed}"), random_cubic_3ec(n, seed).unwrap()));
        }
    }
    out
}

/// Graphs with at most sixteen edges for T-join checks.
pub fn tjoin_corpus() -> Vec<Multigraph> {
    let mut out = vec![generators::k4(), generators::k33(), generators::prism(), generators::petersen(), generators::k5()];
    for seed in 0..10 {
        for n in [6, 8, 10] {
            let g = random_subcubic_2ec(n, seed).unwrap();
            if g.m() <= 16 {
                out.push(g);
            }
        }
    }
    out
}

/// Even terminal sets of size at most six, sampled by a fixed stride.
pub fn terminal_sets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .step_by(7)
        .filter(|m| m.count_ones() % 2 == 0 && m.count_ones() <= 6)
        .map(|m| (0..n).filter(|&v| (m >> v) & 1 == 1).collect())
        .collect()
}

/// Petersen with up to two randomly subdivided edges and integer weights in
/// `8..=12`: subcubic, 2-edge-connected, non-Hamiltonian, `n ≤ 12`.
pub fn perturbed_petersen(seed: u64) -> Multigraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let base = generators::petersen();
    let mut n = base.n();
    let mut pairs: Vec<(usize, usize)> = base.edges().iter().map(|e| (e.u, e.v)).collect();
    for _ in 0..rng.gen_range(0..=2) {
        let i = rng.gen_range(0..pairs.len());
        let (u, v) = pairs.swap_remove(i);
        pairs.push((u, n));
        pairs.push((n, v));
        n += 1;
    }
    let edges = pairs.into_iter().map(|(u, v)| Edge { u, v, weight: int(rng.gen_range(8..=12)) }).collect();
    Multigraph::new(n, edges).unwrap()
}
