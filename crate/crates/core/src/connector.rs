//! Connector decompositions that cross every 2-edge cut an even number of
//! times: equivalence classes of 2-edge-cut edges, bad-tuple normalization,
//! and the per-class repair.

use crate::classify::{is_connector, ObjectClass};
use crate::cuts::{enumerate_cuts_upto, Cut};
use crate::decomp::{decompose_connectors, ConvexCombination, Relation, Term};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeMultiset, EdgeVector, Multigraph, UnionFind};
use crate::rational::Rat;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    D1,
    D2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCutClass {
    pub edges: Vec<EdgeId>,
    pub kind: ClassKind,
    /// The unique edge with `x*_e < 1` in a D2 class.
    pub distinguished: Option<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCutClasses {
    pub classes: Vec<TwoCutClass>,
    pub cuts: Vec<Cut>,
}

fn induced_connected(g: &Multigraph, mask: &[bool]) -> bool {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
    let Some(&s) = verts.first() else { return false };
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for &id in g.incident(x) {
            let y = g.edge(id).other(x);
            if mask[y] && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    verts.iter().all(|&v| seen[v])
}

/// Maximal classes of edges pairwise forming 2-edge cuts of `g`, tagged by
/// the threshold `x*_e ≥ 1`.
pub fn two_cut_classes(g: &Multigraph, x: &EdgeVector) -> Result<TwoCutClasses> {
    if x.len() != g.m() {
        return Err(Error::Precondition("vector length differs from edge count".into()));
    }
    let family = enumerate_cuts_upto(g, 2)?;
    if let Some(c) = family.of_size(1).next() {
        return Err(Error::Precondition(format!("graph has a bridge e{}", c.edges[0])));
    }
    let cuts: Vec<Cut> = family.of_size(2).cloned().collect();
    let mut uf = UnionFind::new(g.m());
    let mut pairs = BTreeSet::new();
    for c in &cuts {
        let mut mask = vec![false; g.n()];
        for &v in &c.shore {
            mask[v] = true;
        }
        let comp: Vec<bool> = mask.iter().map(|b| !b).collect();
        if !induced_connected(g, &mask) || !induced_connected(g, &comp) {
            return Err(Error::Verification(format!("2-edge cut {:?} has a disconnected side", c.edges)));
        }
        uf.union(c.edges[0], c.edges[1]);
        pairs.insert((c.edges[0], c.edges[1]));
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<EdgeId>> = Default::default();
    for c in &cuts {
        for &e in &c.edges {
            groups.entry(uf.find(e)).or_default().push(e);
        }
    }
    let mut classes = Vec::new();
    for (_, mut edges) in groups {
        edges.sort_unstable();
        edges.dedup();
        for (a, &e) in edges.iter().enumerate() {
            for &f in &edges[a + 1..] {
                if !pairs.contains(&(e, f)) {
                    return Err(Error::Verification(format!("e{e} and e{f} share a class but are not a 2-edge cut")));
                }
            }
        }
        let low: Vec<EdgeId> = edges.iter().copied().filter(|&e| *x.get(e) < Rat::one()).collect();
        let (kind, distinguished) = match low.len() {
            0 => (ClassKind::D1, None),
            1 => (ClassKind::D2, Some(low[0])),
            _ => {
                return Err(Error::Precondition(format!(
                    "class {edges:?} has two edges below 1: e{} and e{}",
                    low[0], low[1]
                )))
            }
        };
        classes.push(TwoCutClass { edges, kind, distinguished });
    }
    classes.sort_by(|a, b| a.edges[0].cmp(&b.edges[0]));
    Ok(TwoCutClasses { classes, cuts })
}

/// Number of tuples `(e, i, j)` with `χ^{F_i}(e) = 2` and `χ^{F_j}(e) = 0`.
pub fn bad_tuples(cc: &ConvexCombination, m: usize) -> usize {
    (0..m)
        .map(|e| {
            let twos = cc.terms.iter().filter(|t| t.edges.mult(e) == 2).count();
            let zeros = cc.terms.iter().filter(|t| t.edges.mult(e) == 0).count();
            twos * zeros
        })
        .sum()
}

/// Removes every bad tuple by moving single copies from terms with two
/// copies of `e` to terms without `e`. Unequal coefficients are handled by
/// splitting the heavier term, so the combined vector never changes.
/// Returns the bad-tuple count before each move.
pub fn normalize_connectors_traced(cc: &ConvexCombination, m: usize) -> (ConvexCombination, Vec<usize>) {
    let mut out = cc.clone();
    let mut trace = Vec::new();
    for e in 0..m {
        loop {
            let i = out.terms.iter().position(|t| t.edges.mult(e) == 2);
            let j = out.terms.iter().position(|t| t.edges.mult(e) == 0);
            let (Some(i), Some(j)) = (i, j) else { break };
            trace.push(bad_tuples(&out, m));
            let (li, lj) = (out.terms[i].lambda.clone(), out.terms[j].lambda.clone());
            let mu = if li < lj { li.clone() } else { lj.clone() };
            if li > mu {
                let mut rest = out.terms[i].clone();
                rest.lambda = &li - &mu;
                out.terms[i].lambda = mu.clone();
                out.terms.push(rest);
            }
            if lj > mu {
                let mut rest = out.terms[j].clone();
                rest.lambda = &lj - &mu;
                out.terms[j].lambda = mu.clone();
                out.terms.push(rest);
            }
            out.terms[i].edges.remove_one(e);
            out.terms[j].edges.add(e, 1);
        }
        if out.terms.len() > 2 * (m + 1) {
            out.reduce(m);
        }
    }
    out.merge_duplicates();
    (out, trace)
}

pub fn normalize_connectors(cc: &ConvexCombination, m: usize) -> ConvexCombination {
    normalize_connectors_traced(cc, m).0
}

/// Crossing counts of one 2-edge cut in every term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityRow {
    pub cut: Vec<EdgeId>,
    pub crossings: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenConnectors {
    pub combination: ConvexCombination,
    pub classes: TwoCutClasses,
    pub parity: Vec<ParityRow>,
}

fn repair(cc: &mut ConvexCombination, classes: &TwoCutClasses) {
    for class in &classes.classes {
        match class.distinguished {
            None => {
                for t in cc.terms.iter_mut() {
                    for &f in &class.edges {
                        t.edges.set(f, 1);
                    }
                }
            }
            Some(e) => {
                for t in cc.terms.iter_mut() {
                    let has_e = t.edges.mult(e) >= 1;
                    for &f in &class.edges {
                        let k = if has_e { 1 } else if f == e { 0 } else { 2 };
                        t.edges.set(f, k);
                    }
                }
            }
        }
    }
}

/// Connectors dominated by `x*` crossing every 2-edge cut of `g` evenly.
pub fn even_2cut_connectors(g: &Multigraph, x: &EdgeVector) -> Result<EvenConnectors> {
    let classes = two_cut_classes(g, x)?;
    let base = decompose_connectors(g, x)?;
    let mut cc = normalize_connectors(&base, g.m());
    repair(&mut cc, &classes);
    cc.target = x.clone();
    cc.relation = Relation::DominatedBy;
    cc.reduce(g.m());
    for (i, t) in cc.terms.iter().enumerate() {
        if !is_connector(g, &t.edges) {
            return Err(Error::Verification(format!("term {i} is no longer a connector after repair")));
        }
    }
    let parity = parity_report(&cc, &classes.cuts);
    if let Some(row) = parity.iter().find(|r| r.crossings.iter().any(|c| c % 2 == 1)) {
        return Err(Error::Verification(format!("2-edge cut {:?} is crossed oddly", row.cut)));
    }
    Ok(EvenConnectors { combination: cc, classes, parity })
}

pub fn parity_report(cc: &ConvexCombination, cuts: &[Cut]) -> Vec<ParityRow> {
    cuts.iter()
        .map(|c| ParityRow { cut: c.edges.clone(), crossings: cc.terms.iter().map(|t| c.crossing(&t.edges)).collect() })
        .collect()
}

/// Builds an equal-weight combination of connectors (test and CLI helper).
pub fn uniform_family(terms: Vec<EdgeMultiset>, target: EdgeVector) -> ConvexCombination {
    let k = Rat::from_integer((terms.len() as i64).into());
    ConvexCombination {
        terms: terms
            .into_iter()
            .map(|edges| Term { lambda: Rat::one() / &k, edges, class: ObjectClass::Connector })
            .collect(),
        target,
        relation: Relation::Equals,
    }
}
