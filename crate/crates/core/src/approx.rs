//! Approximation algorithms for TSP and 2EC with exact ratio certificates.
//!
//! Node-weighted cubic 3-edge-connected inputs use the lower bound
//! `z_G = 2·Σf`; the β-algorithms solve the subtour LP for `z_G` and work
//! from connectors that cross every 2-edge cut evenly.

use crate::classify::{is_tour, validate_structure, ObjectClass, Profile};
use crate::connector::even_2cut_connectors;
use crate::cycle_cover::find_covering_cycle_cover;
use crate::decomp::{decompose_one_covers, min_spanning_tree, min_tjoin};
use crate::error::{Error, Result};
use crate::graph::{bridges, contract, EdgeMultiset, EdgeVector, Multigraph, NodeWeights};
use crate::lp::subtour::solve_subtour;
use crate::rational::{fmt_rat, int, rat, serde_rat, serde_rat_opt, Rat};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Tsp75,
    Twoec1310,
    Bip43,
    Bip54,
    Twoecbeta,
    Tspbeta,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Tsp75,
        Algorithm::Twoec1310,
        Algorithm::Bip43,
        Algorithm::Bip54,
        Algorithm::Twoecbeta,
        Algorithm::Tspbeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Tsp75 => "tsp75",
            Algorithm::Twoec1310 => "twoec1310",
            Algorithm::Bip43 => "bip43",
            Algorithm::Bip54 => "bip54",
            Algorithm::Twoecbeta => "twoecbeta",
            Algorithm::Tspbeta => "tspbeta",
        }
    }

    pub fn class(self) -> ObjectClass {
        match self {
            Algorithm::Tsp75 | Algorithm::Bip43 | Algorithm::Tspbeta => ObjectClass::Tour,
            _ => ObjectClass::TwoecMultigraph,
        }
    }

    pub fn needs_node_weights(self) -> bool {
        !matches!(self, Algorithm::Twoecbeta | Algorithm::Tspbeta)
    }

    /// Guarantee for the node-weighted algorithms, or as a function of β.
    pub fn guarantee(self, beta: Option<&Rat>) -> Option<Rat> {
        match self {
            Algorithm::Tsp75 => Some(rat(7, 5)),
            Algorithm::Twoec1310 => Some(rat(13, 10)),
            Algorithm::Bip43 => Some(rat(4, 3)),
            Algorithm::Bip54 => Some(rat(5, 4)),
            Algorithm::Twoecbeta => beta.map(|b| (Rat::one() + int(2) * b) / int(3)),
            Algorithm::Tspbeta => beta.map(|b| Rat::one() + b / int(3)),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown algorithm {s:?}")))
    }
}

pub const RESULT_KIND: &str = "approx";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub kind: String,
    pub algorithm: Algorithm,
    pub graph: Multigraph,
    pub node_weights: Option<NodeWeights>,
    pub solution: EdgeMultiset,
    pub class: ObjectClass,
    #[serde(with = "serde_rat")]
    pub weight: Rat,
    #[serde(with = "serde_rat")]
    pub z_g: Rat,
    #[serde(with = "serde_rat_opt")]
    pub beta: Option<Rat>,
    #[serde(with = "serde_rat")]
    pub guarantee: Rat,
    /// `weight / z_G`.
    #[serde(with = "serde_rat")]
    pub ratio: Rat,
    /// Profile-specific bound implied by the guarantee, when the profile holds.
    #[serde(with = "serde_rat_opt")]
    pub headline: Option<Rat>,
    pub profile: Option<Profile>,
    pub verified: bool,
}

fn check_node_weighted(g: &Multigraph, f: &NodeWeights, profile: Profile) -> Result<()> {
    validate_structure(g, profile)?;
    if f.len() != g.n() {
        return Err(Error::Precondition(format!("{} node weights for {} vertices", f.len(), g.n())));
    }
    if !g.is_node_weighted_by(f) {
        return Err(Error::Precondition("edge weights are not induced by the node weights".into()));
    }
    Ok(())
}

fn total(g: &Multigraph, ids: impl Iterator<Item = usize>) -> Rat {
    ids.fold(Rat::zero(), |acc, e| acc + &g.edge(e).weight)
}

/// Cycle cover `C`, then either `2T` (`join == false`) or `T ∪ J` on `G/C`,
/// where `T` is a minimum spanning tree and `J` a minimum join on its odd
/// vertices. Every edge of `G/C` carries `r` in the bounding vector.
fn quotient_pipeline(g: &Multigraph, f: &NodeWeights, profile: Profile, r: Rat, join: bool) -> Result<(EdgeMultiset, Rat)> {
    check_node_weighted(g, f, profile)?;
    let z = int(2) * f.total();
    let cover = find_covering_cycle_cover(g)?;
    let wc = cover.cover.weight(g);
    let wm = total(g, cover.matching.iter().copied());
    if wc != z || wm * int(2) != z {
        return Err(Error::Verification("cycle cover or matching weight differs from the node-weight identity".into()));
    }
    let q = contract(g, &cover.cover);
    let h = &q.graph;
    let wq = h.total_weight();
    let all: Vec<usize> = (0..h.m()).collect();
    let tree = min_spanning_tree(h, &h.weights(), &all)
        .ok_or_else(|| Error::Verification("contraction is disconnected".into()))?;
    if tree.weight(h) > &r * &wq {
        return Err(Error::Verification("spanning tree of G/C exceeds its LP bound".into()));
    }
    let extra = if join {
        let j = min_tjoin(h, &tree.odd_vertices(h))?;
        if j.weight(h) * int(2) > &r * &wq {
            return Err(Error::Verification("join of G/C exceeds its LP bound".into()));
        }
        tree.union(&j)
    } else {
        tree.times(2)
    };
    Ok((cover.cover.union(&q.lift(&extra)), z))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &Multigraph,
    algorithm: Algorithm,
    f: Option<&NodeWeights>,
    solution: EdgeMultiset,
    z_g: Rat,
    beta: Option<Rat>,
    headline: Option<Rat>,
    profile: Option<Profile>,
) -> Result<ApproxResult> {
    let weight = solution.weight(g);
    let guarantee = algorithm.guarantee(beta.as_ref()).expect("beta present for beta algorithms");
    let mut r = ApproxResult {
        kind: RESULT_KIND.into(),
        algorithm,
        graph: g.clone(),
        node_weights: f.cloned(),
        solution,
        class: algorithm.class(),
        ratio: &weight / &z_g,
        weight,
        z_g,
        beta,
        guarantee,
        headline,
        profile,
        verified: false,
    };
    verify_approx(&r)?;
    r.verified = true;
    Ok(r)
}

pub fn tsp_7_5_node_weighted(g: &Multigraph, f: &NodeWeights) -> Result<ApproxResult> {
    let (sol, z) = quotient_pipeline(g, f, Profile::Cubic3ec, rat(2, 5), false)?;
    finish(g, Algorithm::Tsp75, Some(f), sol, z, None, None, Some(Profile::Cubic3ec))
}

pub fn twoec_13_10_node_weighted(g: &Multigraph, f: &NodeWeights) -> Result<ApproxResult> {
    let (sol, z) = quotient_pipeline(g, f, Profile::Cubic3ec, rat(2, 5), true)?;
    finish(g, Algorithm::Twoec1310, Some(f), sol, z, None, None, Some(Profile::Cubic3ec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Tsp,
    Twoec,
}

pub fn bipartite_variants(g: &Multigraph, f: &NodeWeights, target: Target) -> Result<ApproxResult> {
    let p = Profile::BipartiteCubic3ec;
    let (alg, join) = match target {
        Target::Tsp => (Algorithm::Bip43, false),
        Target::Twoec => (Algorithm::Bip54, true),
    };
    let (sol, z) = quotient_pipeline(g, f, p, rat(1, 3), join)?;
    finish(g, alg, Some(f), sol, z, None, None, Some(p))
}

fn check_two_edge_connected(g: &Multigraph) -> Result<()> {
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected with at least 3 vertices".into()));
    }
    if let Some(&e) = bridges(g, &EdgeMultiset::from_ids(0..g.m())).first() {
        return Err(Error::Precondition(format!("graph has a bridge e{e}")));
    }
    Ok(())
}

fn subcubic_node_weighted<'a>(g: &Multigraph, f: Option<&'a NodeWeights>) -> Option<&'a NodeWeights> {
    f.filter(|f| f.len() == g.n() && g.is_node_weighted_by(f) && validate_structure(g, Profile::Subcubic2ec).is_ok())
}

fn pick_min(cands: Vec<EdgeMultiset>, g: &Multigraph) -> EdgeMultiset {
    cands
        .into_iter()
        .map(|h| (h.weight(g), h))
        .min()
        .map(|(_, h)| h)
        .expect("at least one candidate")
}

/// 2EC via even-2-cut connectors plus 1-covers; `(1+2β)/3` with `β = w(E)/z_G`.
/// The `4/3` headline is reported when `f` makes `g` a node-weighted subcubic graph.
pub fn twoec_beta(g: &Multigraph, f: Option<&NodeWeights>) -> Result<ApproxResult> {
    check_two_edge_connected(g)?;
    let lp = solve_subtour(g)?;
    let even = even_2cut_connectors(g, &lp.x)?;
    let cands: Vec<Vec<EdgeMultiset>> = even
        .combination
        .terms
        .par_iter()
        .map(|t| {
            let y = EdgeVector((0..g.m()).map(|e| if t.edges.mult(e) > 0 { Rat::zero() } else { rat(1, 2) }).collect());
            let covers = decompose_one_covers(g, &t.edges, &y, &rat(1, 2))?;
            Ok(covers.terms.iter().map(|c| t.edges.union(&c.edges)).collect())
        })
        .collect::<Result<_>>()?;
    let sol = pick_min(cands.into_iter().flatten().collect(), g);
    let beta = g.total_weight() / &lp.value;
    let nw = subcubic_node_weighted(g, f);
    let headline = nw.map(|_| rat(4, 3));
    finish(g, Algorithm::Twoecbeta, f, sol, lp.value, Some(beta), headline, nw.map(|_| Profile::Subcubic2ec))
}

/// TSP via even-2-cut connectors plus a minimum join on their odd vertices;
/// `1 + β/3`. The headline for node-weighted subcubic graphs is
/// `3/2 − ε/3` with `z_G = 2(1+ε)Σf`.
pub fn tsp_beta(g: &Multigraph, f: Option<&NodeWeights>) -> Result<ApproxResult> {
    check_two_edge_connected(g)?;
    let lp = solve_subtour(g)?;
    let even = even_2cut_connectors(g, &lp.x)?;
    let third = g.total_weight() / int(3);
    let cands: Vec<EdgeMultiset> = even
        .combination
        .terms
        .par_iter()
        .map(|t| {
            let j = min_tjoin(g, &t.edges.odd_vertices(g))?;
            if j.weight(g) > third {
                return Err(Error::Verification("join exceeds w(E)/3".into()));
            }
            Ok(t.edges.union(&j))
        })
        .collect::<Result<_>>()?;
    let sol = pick_min(cands, g);
    let beta = g.total_weight() / &lp.value;
    let nw = subcubic_node_weighted(g, f);
    let headline = nw.map(|f| {
        let eps = &lp.value / (int(2) * f.total()) - Rat::one();
        rat(3, 2) - eps / int(3)
    });
    finish(g, Algorithm::Tspbeta, f, sol, lp.value, Some(beta), headline, nw.map(|_| Profile::Subcubic2ec))
}

/// Dispatches `algorithm`; node weights are required by the cubic pipelines.
pub fn run(algorithm: Algorithm, g: &Multigraph, f: Option<&NodeWeights>) -> Result<ApproxResult> {
    let need = || f.ok_or_else(|| Error::Precondition(format!("{algorithm} needs node weights")));
    match algorithm {
        Algorithm::Tsp75 => tsp_7_5_node_weighted(g, need()?),
        Algorithm::Twoec1310 => twoec_13_10_node_weighted(g, need()?),
        Algorithm::Bip43 => bipartite_variants(g, need()?, Target::Tsp),
        Algorithm::Bip54 => bipartite_variants(g, need()?, Target::Twoec),
        Algorithm::Twoecbeta => twoec_beta(g, f),
        Algorithm::Tspbeta => tsp_beta(g, f),
    }
}

/// Re-checks a result from its own fields, recomputing `z_G`.
pub fn verify_approx(r: &ApproxResult) -> Result<()> {
    let fail = |m: String| Err(Error::Verification(m));
    if r.kind != RESULT_KIND {
        return fail(format!("kind {:?} is not {RESULT_KIND:?}", r.kind));
    }
    let g = &r.graph;
    if r.class != r.algorithm.class() {
        return fail(format!("class {} does not match {}", r.class.name(), r.algorithm));
    }
    if r.solution.ids().any(|e| e >= g.m()) {
        return fail("solution uses an edge outside the graph".into());
    }
    let class_ok = match r.class {
        ObjectClass::Tour => is_tour(g, &r.solution),
        c => c.holds(g, &r.solution).unwrap_or(false),
    };
    if !class_ok {
        return fail(format!("solution is not a {}", r.class.name()));
    }
    let weight = r.solution.weight(g);
    if weight != r.weight {
        return fail(format!("weight {} differs from recomputed {}", fmt_rat(&r.weight), fmt_rat(&weight)));
    }
    let z = if r.algorithm.needs_node_weights() {
        let f = match &r.node_weights {
            Some(f) => f,
            None => return fail("node weights missing".into()),
        };
        let profile = match r.algorithm {
            Algorithm::Bip43 | Algorithm::Bip54 => Profile::BipartiteCubic3ec,
            _ => Profile::Cubic3ec,
        };
        check_node_weighted(g, f, profile).map_err(|e| Error::Verification(e.to_string()))?;
        int(2) * f.total()
    } else {
        solve_subtour(g)?.value
    };
    if z != r.z_g {
        return fail(format!("z_G {} differs from recomputed {}", fmt_rat(&r.z_g), fmt_rat(&z)));
    }
    let beta = (!r.algorithm.needs_node_weights()).then(|| g.total_weight() / &z);
    if beta != r.beta {
        return fail("beta differs from w(E)/z_G".into());
    }
    let guarantee = r.algorithm.guarantee(beta.as_ref()).expect("beta computed");
    if guarantee != r.guarantee {
        return fail(format!("guarantee {} differs from {}", fmt_rat(&r.guarantee), fmt_rat(&guarantee)));
    }
    if r.ratio != &weight / &z {
        return fail("ratio differs from weight / z_G".into());
    }
    if weight > &guarantee * &z {
        return fail(format!(
            "weight {} exceeds {} · {}",
            fmt_rat(&weight),
            fmt_rat(&guarantee),
            fmt_rat(&z)
        ));
    }
    if let Some(h) = &r.headline {
        if guarantee > *h {
            return fail(format!("guarantee {} exceeds headline {}", fmt_rat(&guarantee), fmt_rat(h)));
        }
    }
    Ok(())
}
