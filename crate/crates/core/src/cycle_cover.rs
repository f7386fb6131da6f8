//! Cycle covers of bridgeless cubic graphs meeting every 3- and 4-edge cut
//! at least twice, found by exhaustive perfect-matching enumeration.

use crate::cuts::{enumerate_cuts_upto, Cut};
use crate::error::{Error, Result};
use crate::graph::{contract, EdgeId, EdgeMultiset, Multigraph};
use crate::lp::mincut::min_cut;
use crate::rational::Rat;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCoverResult {
    pub cover: EdgeMultiset,
    /// Each cycle as a closed vertex sequence (first vertex not repeated).
    pub cycles: Vec<Vec<usize>>,
    /// `E \ C`, a perfect matching.
    pub matching: Vec<EdgeId>,
    /// Matching edges with both ends on one cycle.
    pub m_edges: Vec<EdgeId>,
    /// Matching edges joining different cycles: the edges of `G/C`.
    pub quotient_edges: Vec<EdgeId>,
    /// Number of 3- and 4-edge cuts checked.
    pub cuts_checked: usize,
}

fn check_cubic_bridgeless(g: &Multigraph) -> Result<()> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::Precondition(format!("vertex {v} has degree {}", g.degree(v))));
    }
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if !crate::graph::bridges(g, &EdgeMultiset::from_ids(0..g.m())).is_empty() {
        return Err(Error::Precondition("graph has a bridge".into()));
    }
    Ok(())
}

/// Calls `visit` on every perfect matching in canonical order (lowest
/// unmatched vertex first, incident edges by ascending id) until it returns true.
pub fn for_each_perfect_matching(g: &Multigraph, mut visit: impl FnMut(&[EdgeId]) -> bool) -> bool {
    fn rec(g: &Multigraph, matched: &mut [bool], chosen: &mut Vec<EdgeId>, visit: &mut dyn FnMut(&[EdgeId]) -> bool) -> bool {
        let Some(v) = matched.iter().position(|&b| !b) else {
            return visit(chosen);
        };
        let mut inc: Vec<EdgeId> = g.incident(v).to_vec();
        inc.sort_unstable();
        for id in inc {
            let w = g.edge(id).other(v);
            if matched[w] {
                continue;
            }
            matched[v] = true;
            matched[w] = true;
            chosen.push(id);
            if rec(g, matched, chosen, visit) {
                return true;
            }
            chosen.pop();
            matched[v] = false;
            matched[w] = false;
        }
        false
    }
    let mut matched = vec![false; g.n()];
    rec(g, &mut matched, &mut Vec::new(), &mut visit)
}

/// Vertex sequences of the cycles of a 2-regular edge set.
pub fn cycles_of(g: &Multigraph, cover: &EdgeMultiset) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut used = vec![false; g.m()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut cur = s;
        loop {
            let mut inc: Vec<EdgeId> = g.incident(cur).iter().copied().filter(|&id| cover.mult(id) > 0 && !used[id]).collect();
            inc.sort_unstable();
            let Some(&id) = inc.first() else { break };
            used[id] = true;
            let next = g.edge(id).other(cur);
            if next == s {
                break;
            }
            seen[next] = true;
            cyc.push(next);
            cur = next;
        }
        out.push(cyc);
    }
    out
}

fn covers_small_cuts(cuts: &[Cut], cover: &EdgeMultiset) -> bool {
    cuts.iter().all(|c| c.crossing(cover) >= 2)
}

/// Splits the complement of `cover` into intra-cycle edges and quotient edges.
pub fn build_result(g: &Multigraph, cover: EdgeMultiset, cuts_checked: usize) -> CycleCoverResult {
    let q = contract(g, &cover);
    let matching: Vec<EdgeId> = (0..g.m()).filter(|&id| cover.mult(id) == 0).collect();
    let (m_edges, quotient_edges): (Vec<EdgeId>, Vec<EdgeId>) = matching.iter().partition(|&&id| {
        let (u, v) = g.endpoints(id);
        q.vertex_map[u] == q.vertex_map[v]
    });
    CycleCoverResult { cycles: cycles_of(g, &cover), cover, matching, m_edges, quotient_edges, cuts_checked }
}

/// A cycle cover meeting every 3- and 4-edge cut at least twice.
pub fn find_covering_cycle_cover(g: &Multigraph) -> Result<CycleCoverResult> {
    check_cubic_bridgeless(g)?;
    let family = enumerate_cuts_upto(g, 4)?;
    let small: Vec<Cut> = family.iter().filter(|c| c.size() >= 3).cloned().collect();
    let mut found = None;
    for_each_perfect_matching(g, |pm| {
        let mut cover = EdgeMultiset::from_ids(0..g.m());
        for &id in pm {
            cover.set(id, 0);
        }
        if covers_small_cuts(&small, &cover) {
            found = Some(cover);
            true
        } else {
            false
        }
    });
    let cover = found.ok_or_else(|| Error::Precondition("no cycle cover meets every 3- and 4-edge cut".into()))?;
    Ok(build_result(g, cover, small.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionReport {
    pub vertices: usize,
    pub edges: usize,
    pub edge_connectivity: Option<usize>,
    pub required: usize,
    pub bipartite_input: bool,
    pub even_degrees: bool,
}

/// Checks that `G/C` is 5-edge-connected, and 6-edge-connected with all
/// degrees even when `G` is bipartite.
pub fn verify_contraction(g: &Multigraph, r: &CycleCoverResult) -> Result<ContractionReport> {
    let q = contract(g, &r.cover).graph;
    let bipartite = g.is_bipartite();
    let required = if bipartite { 6 } else { 5 };
    let even_degrees = (0..q.n()).all(|v| q.degree(v).is_multiple_of(2));
    let edge_connectivity = if q.n() >= 2 {
        let (value, shore) = min_cut(&q, &vec![Rat::one(); q.m()])?;
        let k = value.to_integer().to_usize().unwrap_or(usize::MAX);
        if k < required {
            let mut mask = vec![false; q.n()];
            for v in shore {
                mask[v] = true;
            }
            return Err(Error::Verification(format!(
                "contraction has a {k}-edge cut {:?} (needs {required})",
                q.cut_edges(&mask)
            )));
        }
        Some(k)
    } else {
        None
    };
    if bipartite && !even_degrees {
        return Err(Error::Verification("contraction of a bipartite input has an odd degree".into()));
    }
    Ok(ContractionReport { vertices: q.n(), edges: q.m(), edge_connectivity, required, bipartite_input: bipartite, even_degrees })
}
