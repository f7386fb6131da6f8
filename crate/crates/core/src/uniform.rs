//! Uniform covers of cubic and 4-regular graphs: the everywhere-α vector
//! dominates a convex combination of tours or 2-edge-connected multigraphs.
//!
//! Each variant mixes two sub-combinations with fixed weights:
//!
//! | variant | profile             | objects          | mix            |
//! |---------|---------------------|------------------|----------------|
//! | 18/19   | cubic-3ec           | tours            | 15/19, 4/19    |
//! | 12/13   | bipartite-cubic-3ec | tours            | 9/13, 4/13     |
//! | 15/17   | cubic-3ec           | 2EC multigraphs  | 5/17, 12/17    |
//! | 7/8     | bipartite-cubic-3ec | 2EC multigraphs  | 1/4, 3/4       |
//! | 8/9     | cubic-3ec           | 2EC subgraphs    | trees + covers |
//! | 3/4     | 4regular-4ec        | 2EC subgraphs    | trees + covers |

use crate::classify::{validate_structure, ObjectClass, Profile};
use crate::cycle_cover::{find_covering_cycle_cover, CycleCoverResult};
use crate::decomp::{
    decompose_one_covers, decompose_spanning_trees, wolsey_tours, ClassContext, ConvexCombination, Relation, Term,
};
use crate::error::{Error, Result};
use crate::graph::{contract, Contraction, EdgeMultiset, EdgeVector, Multigraph};
use crate::rational::{fmt_rat, int, rat, serde_rat, Rat};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "18/19")]
    Tours18_19,
    #[serde(rename = "12/13")]
    Tours12_13,
    #[serde(rename = "15/17")]
    Twoec15_17,
    #[serde(rename = "7/8")]
    Twoec7_8,
    #[serde(rename = "8/9")]
    Subgraphs8_9,
    #[serde(rename = "3/4")]
    Subgraphs3_4,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::Tours18_19,
        Variant::Tours12_13,
        Variant::Twoec15_17,
        Variant::Twoec7_8,
        Variant::Subgraphs8_9,
        Variant::Subgraphs3_4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Tours18_19 => "18/19",
            Variant::Tours12_13 => "12/13",
            Variant::Twoec15_17 => "15/17",
            Variant::Twoec7_8 => "7/8",
            Variant::Subgraphs8_9 => "8/9",
            Variant::Subgraphs3_4 => "3/4",
        }
    }

    pub fn alpha(self) -> Rat {
        match self {
            Variant::Tours18_19 => rat(18, 19),
            Variant::Tours12_13 => rat(12, 13),
            Variant::Twoec15_17 => rat(15, 17),
            Variant::Twoec7_8 => rat(7, 8),
            Variant::Subgraphs8_9 => rat(8, 9),
            Variant::Subgraphs3_4 => rat(3, 4),
        }
    }

    pub fn profile(self) -> Profile {
        match self {
            Variant::Tours18_19 | Variant::Twoec15_17 | Variant::Subgraphs8_9 => Profile::Cubic3ec,
            Variant::Tours12_13 | Variant::Twoec7_8 => Profile::BipartiteCubic3ec,
            Variant::Subgraphs3_4 => Profile::FourRegular4ec,
        }
    }

    pub fn class(self) -> ObjectClass {
        match self {
            Variant::Tours18_19 | Variant::Tours12_13 => ObjectClass::Tour,
            Variant::Twoec15_17 | Variant::Twoec7_8 => ObjectClass::TwoecMultigraph,
            Variant::Subgraphs8_9 | Variant::Subgraphs3_4 => ObjectClass::TwoecSubgraph,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown variant {s:?}")))
    }
}

pub const CERTIFICATE_KIND: &str = "uniform-cover";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: String,
    pub variant: Variant,
    pub profile: Profile,
    #[serde(with = "serde_rat")]
    pub alpha: Rat,
    pub class: ObjectClass,
    pub graph: Multigraph,
    pub combination: ConvexCombination,
    /// `α − Σλχ` per edge.
    pub slack: EdgeVector,
    pub elapsed_ms: u64,
}

type Parts = Vec<(Rat, EdgeMultiset)>;

struct Quotient {
    cover: CycleCoverResult,
    q: Contraction,
}

fn quotient(g: &Multigraph) -> Result<Quotient> {
    let cover = find_covering_cycle_cover(g)?;
    let q = contract(g, &cover.cover);
    Ok(Quotient { cover, q })
}

/// `C ∪ 2T` for trees `T` of `G/C` under the everywhere-`r` vector.
fn cover_plus_doubled_trees(qt: &Quotient, r: Rat) -> Result<Parts> {
    let h = &qt.q.graph;
    let trees = decompose_spanning_trees(h, &EdgeVector::everywhere(h.m(), r))?;
    Ok(trees
        .terms
        .into_iter()
        .map(|t| (t.lambda, qt.cover.cover.union(&qt.q.lift(&t.edges.times(2)))))
        .collect())
}

/// `C ∪ R` for tours `R` of `G/C` under `(3/2)·` the everywhere-`r` vector.
fn cover_plus_quotient_tours(qt: &Quotient, r: Rat) -> Result<Parts> {
    let h = &qt.q.graph;
    if h.n() == 1 {
        return Ok(vec![(Rat::one(), qt.cover.cover.clone())]);
    }
    let tours = wolsey_tours(h, &EdgeVector::everywhere(h.m(), r))?;
    Ok(tours.terms.into_iter().map(|t| (t.lambda, qt.cover.cover.union(&qt.q.lift(&t.edges)))).collect())
}

/// `1/2` on the cycle cover, `1` elsewhere.
fn half_on_cover(g: &Multigraph, c: &EdgeMultiset) -> EdgeVector {
    EdgeVector((0..g.m()).map(|e| if c.mult(e) > 0 { rat(1, 2) } else { int(1) }).collect())
}

fn wolsey_parts(g: &Multigraph, u: &EdgeVector) -> Result<Parts> {
    Ok(wolsey_tours(g, u)?.terms.into_iter().map(|t| (t.lambda, t.edges)).collect())
}

/// `T ∪ C` for trees `T` under `y` and 1-covers `C` of `T` under
/// `(2/(1+α))·y^T`, where `y^T` is `off` outside `T` and `0` on it.
fn trees_plus_covers(g: &Multigraph, y: &EdgeVector, off: Rat, alpha: Rat) -> Result<Parts> {
    let trees = decompose_spanning_trees(g, y)?;
    let per_tree: Vec<Parts> = trees
        .terms
        .par_iter()
        .map(|t| {
            let yi = EdgeVector((0..g.m()).map(|e| if t.edges.mult(e) > 0 { Rat::zero() } else { off.clone() }).collect());
            let covers = decompose_one_covers(g, &t.edges, &yi, &alpha)?;
            Ok(covers.terms.into_iter().map(|c| (&t.lambda * &c.lambda, t.edges.union(&c.edges))).collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_tree.into_iter().flatten().collect())
}

fn mix(a: Rat, pa: Parts, b: Rat, pb: Parts) -> Parts {
    pa.into_iter()
        .map(|(l, h)| (&a * l, h))
        .chain(pb.into_iter().map(|(l, h)| (&b * l, h)))
        .collect()
}

fn both<A, B>(fa: impl FnOnce() -> Result<A> + Send, fb: impl FnOnce() -> Result<B> + Send) -> Result<(A, B)>
where
    A: Send,
    B: Send,
{
    let (a, b) = rayon::join(fa, fb);
    Ok((a?, b?))
}

fn build_parts(g: &Multigraph, variant: Variant) -> Result<Parts> {
    match variant {
        Variant::Tours18_19 | Variant::Tours12_13 => {
            let qt = quotient(g)?;
            let (r, wa, wb) = if variant == Variant::Tours18_19 {
                (rat(2, 5), rat(15, 19), rat(4, 19))
            } else {
                (rat(1, 3), rat(9, 13), rat(4, 13))
            };
            let u = half_on_cover(g, &qt.cover.cover);
            let (v, w) = both(|| cover_plus_doubled_trees(&qt, r), || wolsey_parts(g, &u))?;
            Ok(mix(wa, v, wb, w))
        }
        Variant::Twoec15_17 | Variant::Twoec7_8 => {
            let qt = quotient(g)?;
            let (r, wa, wb) = if variant == Variant::Twoec15_17 {
                (rat(2, 5), rat(5, 17), rat(12, 17))
            } else {
                (rat(1, 3), rat(1, 4), rat(3, 4))
            };
            let y = half_on_cover(g, &qt.cover.cover);
            let (v, u) = both(
                || cover_plus_quotient_tours(&qt, r),
                || trees_plus_covers(g, &y, rat(1, 2), rat(1, 2)),
            )?;
            Ok(mix(wa, v, wb, u))
        }
        Variant::Subgraphs8_9 => trees_plus_covers(g, &EdgeVector::everywhere(g.m(), rat(2, 3)), rat(1, 2), rat(1, 2)),
        Variant::Subgraphs3_4 => trees_plus_covers(g, &EdgeVector::everywhere(g.m(), rat(1, 2)), rat(1, 3), rat(1, 3)),
    }
}

/// Builds and self-checks the certificate for `variant` on `g`.
pub fn uniform_cover(g: &Multigraph, variant: Variant) -> Result<Certificate> {
    let start = Instant::now();
    validate_structure(g, variant.profile())?;
    let parts = build_parts(g, variant)?;
    let alpha = variant.alpha();
    let class = variant.class();
    let mut combination = ConvexCombination {
        terms: parts.into_iter().map(|(lambda, edges)| Term { lambda, edges, class }).collect(),
        target: EdgeVector::everywhere(g.m(), alpha.clone()),
        relation: Relation::DominatedBy,
    };
    combination.reduce(g.m());
    let combined = combination.combined(g.m());
    let slack = EdgeVector((0..g.m()).map(|e| &alpha - combined.get(e)).collect());
    let cert = Certificate {
        kind: CERTIFICATE_KIND.into(),
        variant,
        profile: variant.profile(),
        alpha,
        class,
        graph: g.clone(),
        combination,
        slack,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    verify_certificate(&cert)?;
    Ok(cert)
}

pub fn tours_18_19(g: &Multigraph) -> Result<Certificate> {
    uniform_cover(g, Variant::Tours18_19)
}

pub fn tours_12_13_bipartite(g: &Multigraph) -> Result<Certificate> {
    uniform_cover(g, Variant::Tours12_13)
}

pub fn twoec_15_17(g: &Multigraph) -> Result<Certificate> {
    uniform_cover(g, Variant::Twoec15_17)
}

pub fn twoec_7_8_bipartite(g: &Multigraph) -> Result<Certificate> {
    uniform_cover(g, Variant::Twoec7_8)
}

pub fn twoec_8_9_subgraphs(g: &Multigraph) -> Result<Certificate> {
    uniform_cover(g, Variant::Subgraphs8_9)
}

pub fn twoec_3_4_4regular(g: &Multigraph) -> Result<Certificate> {
    uniform_cover(g, Variant::Subgraphs3_4)
}

/// Re-checks a certificate from its own fields only.
pub fn verify_certificate(c: &Certificate) -> Result<()> {
    let fail = |m: String| Err(Error::Verification(m));
    if c.kind != CERTIFICATE_KIND {
        return fail(format!("kind {:?} is not {CERTIFICATE_KIND:?}", c.kind));
    }
    if c.alpha != c.variant.alpha() {
        return fail(format!("alpha {} does not match variant {}", fmt_rat(&c.alpha), c.variant));
    }
    if c.profile != c.variant.profile() {
        return fail(format!("profile {} does not match variant {}", c.profile, c.variant));
    }
    if c.class != c.variant.class() {
        return fail(format!("class {} does not match variant {}", c.class.name(), c.variant));
    }
    let g = &c.graph;
    validate_structure(g, c.profile).map_err(|e| Error::Verification(e.to_string()))?;
    let cc = &c.combination;
    if cc.relation != Relation::DominatedBy {
        return fail("relation must be dominated-by".into());
    }
    if cc.target != EdgeVector::everywhere(g.m(), c.alpha.clone()) {
        return fail("target is not the everywhere-alpha vector".into());
    }
    if let Some((i, t)) = cc.terms.iter().enumerate().find(|(_, t)| t.class != c.class) {
        return fail(format!("term {i} is labelled {}", t.class.name()));
    }
    cc.verify(g, &ClassContext::None)?;
    if c.slack.len() != g.m() {
        return fail("slack length differs from edge count".into());
    }
    let combined = cc.combined(g.m());
    for e in 0..g.m() {
        let s = c.slack.get(e);
        if s.is_negative() {
            return fail(format!("edge {e}: negative slack {}", fmt_rat(s)));
        }
        if *s != &c.alpha - combined.get(e) {
            return fail(format!("edge {e}: slack {} disagrees with the combination", fmt_rat(s)));
        }
    }
    Ok(())
}
