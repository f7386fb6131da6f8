//! Exact membership tests with a violated constraint on failure.

use crate::cuts::canonical_shore;
use crate::error::{Error, MembershipFailure, Result};
use crate::graph::{bridges, component_labels, EdgeMultiset, EdgeVector, Multigraph};
use crate::lp::mincut::{min_cut, min_t_odd_cut};
use crate::rational::{int, Rat};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Polyhedron {
    Subtour,
    SubtourEq,
    TJoinUp(Vec<usize>),
    Cover(EdgeMultiset),
}

impl Polyhedron {
    pub fn name(&self) -> &'static str {
        match self {
            Polyhedron::Subtour => "subtour",
            Polyhedron::SubtourEq => "subtour-eq",
            Polyhedron::TJoinUp(_) => "tjoin-up",
            Polyhedron::Cover(_) => "cover",
        }
    }
}

/// A violated constraint `x(δ(S)) ≥ rhs` (or `= rhs` for degree rows).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub shore: Vec<usize>,
    #[serde(with = "crate::rational::serde_rat")]
    pub value: Rat,
    #[serde(with = "crate::rational::serde_rat")]
    pub rhs: Rat,
    /// Negative coordinate, when that is the violated constraint.
    pub negative_edge: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Violated(Violation),
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside)
    }

    /// Converts a violation into the crate error for `polyhedron`.
    pub fn into_result(self, polyhedron: &Polyhedron) -> Result<()> {
        match self {
            Membership::Inside => Ok(()),
            Membership::Violated(v) => Err(Error::Membership(Box::new(MembershipFailure {
                polyhedron: polyhedron.name().into(),
                shore: v.shore,
                value: v.value,
                rhs: v.rhs,
            }))),
        }
    }
}

fn shore_value(g: &Multigraph, x: &EdgeVector, mask: &[bool]) -> Rat {
    x.sum_over(&g.cut_edges(mask))
}

fn mask_of(n: usize, shore: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in shore {
        m[v] = true;
    }
    m
}

pub fn membership(g: &Multigraph, x: &EdgeVector, p: &Polyhedron) -> Result<Membership> {
    if x.len() != g.m() {
        return Err(Error::Precondition(format!(
            "vector has {} entries but the graph has {} edges",
            x.len(),
            g.m()
        )));
    }
    if let Some(e) = (0..x.len()).find(|&e| x.get(e).is_negative()) {
        return Ok(Membership::Violated(Violation {
            shore: Vec::new(),
            value: x.get(e).clone(),
            rhs: Rat::zero(),
            negative_edge: Some(e),
        }));
    }
    match p {
        Polyhedron::Subtour => subtour(g, x),
        Polyhedron::SubtourEq => {
            for v in 0..g.n() {
                let mask = mask_of(g.n(), &[v]);
                let value = shore_value(g, x, &mask);
                if value != int(2) {
                    return Ok(Membership::Violated(Violation {
                        shore: vec![v],
                        value,
                        rhs: int(2),
                        negative_edge: None,
                    }));
                }
            }
            subtour(g, x)
        }
        Polyhedron::TJoinUp(t) => {
            let mut t = t.clone();
            t.sort_unstable();
            t.dedup();
            if t.len() % 2 == 1 {
                return Err(Error::Precondition(format!("odd |T| = {}", t.len())));
            }
            if t.is_empty() {
                return Ok(Membership::Inside);
            }
            match min_t_odd_cut(g, x.values(), &t) {
                Some((value, mask)) if value < Rat::one() => Ok(Membership::Violated(Violation {
                    shore: canonical_shore(&mask),
                    value,
                    rhs: Rat::one(),
                    negative_edge: None,
                })),
                _ => Ok(Membership::Inside),
            }
        }
        Polyhedron::Cover(f) => {
            for (mask, _) in one_edge_cut_shores(g, f)? {
                let value = shore_value(g, x, &mask);
                if value < Rat::one() {
                    return Ok(Membership::Violated(Violation {
                        shore: canonical_shore(&mask),
                        value,
                        rhs: Rat::one(),
                        negative_edge: None,
                    }));
                }
            }
            Ok(Membership::Inside)
        }
    }
}

fn subtour(g: &Multigraph, x: &EdgeVector) -> Result<Membership> {
    if g.n() < 2 {
        return Ok(Membership::Inside);
    }
    let (value, shore) = min_cut(g, x.values())?;
    if value < int(2) {
        let mask = mask_of(g.n(), &shore);
        return Ok(Membership::Violated(Violation {
            shore: canonical_shore(&mask),
            value,
            rhs: int(2),
            negative_edge: None,
        }));
    }
    Ok(Membership::Inside)
}

/// For each bridge `b` of the connector `f`, the shore of one side of `f − b`
/// (as a membership mask) paired with `b`.
pub fn one_edge_cut_shores(g: &Multigraph, f: &EdgeMultiset) -> Result<Vec<(Vec<bool>, usize)>> {
    if !crate::graph::is_connected_spanning(g, f) {
        return Err(Error::Precondition("cover polyhedron needs a connected spanning F".into()));
    }
    let mut out = Vec::new();
    for b in bridges(g, f) {
        let mut rest = f.clone();
        rest.set(b, 0);
        let (_, label) = component_labels(g, &rest);
        let (u, _) = g.endpoints(b);
        let mask: Vec<bool> = (0..g.n()).map(|v| label[v] == label[u]).collect();
        out.push((mask, b));
    }
    Ok(out)
}
