//! Structural classifiers for edge multisets and input-profile validation.

use crate::error::{Error, Result};
use crate::graph::{bridges, is_connected_spanning, EdgeMultiset, Multigraph};
use crate::lp::mincut::min_cut;
use crate::rational::Rat;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    Tour,
    TwoecMultigraph,
    Connector,
    CycleCover,
}

/// Multi-label classification of `h` as a spanning multigraph of `g`.
pub fn classify(g: &Multigraph, h: &EdgeMultiset) -> BTreeSet<Label> {
    let mut out = BTreeSet::new();
    if is_tour(g, h) {
        out.insert(Label::Tour);
    }
    if is_twoec_multigraph(g, h) {
        out.insert(Label::TwoecMultigraph);
    }
    if is_connector(g, h) {
        out.insert(Label::Connector);
    }
    if is_cycle_cover(g, h) {
        out.insert(Label::CycleCover);
    }
    out
}

pub fn is_tour(g: &Multigraph, h: &EdgeMultiset) -> bool {
    is_connected_spanning(g, h) && h.degrees(g).iter().all(|d| d % 2 == 0)
}

pub fn is_twoec_multigraph(g: &Multigraph, h: &EdgeMultiset) -> bool {
    is_connected_spanning(g, h) && bridges(g, h).is_empty()
}

/// 2-edge-connected spanning subgraph: no edge used twice.
pub fn is_twoec_subgraph(g: &Multigraph, h: &EdgeMultiset) -> bool {
    h.max_mult() <= 1 && is_twoec_multigraph(g, h)
}

pub fn is_connector(g: &Multigraph, h: &EdgeMultiset) -> bool {
    h.max_mult() <= 2 && is_connected_spanning(g, h)
}

pub fn is_cycle_cover(g: &Multigraph, h: &EdgeMultiset) -> bool {
    g.n() > 0 && h.max_mult() <= 1 && h.degrees(g).iter().all(|&d| d == 2)
}

pub fn is_spanning_tree(g: &Multigraph, h: &EdgeMultiset) -> bool {
    h.max_mult() <= 1 && h.size() as usize + 1 == g.n() && is_connected_spanning(g, h)
}

/// Odd-degree vertex set of `h` equals `t`.
pub fn is_tjoin(g: &Multigraph, h: &EdgeMultiset, t: &[usize]) -> bool {
    let mut want: Vec<usize> = t.to_vec();
    want.sort_unstable();
    want.dedup();
    h.odd_vertices(g) == want
}

/// `c` meets every 1-edge cut of the connector `f`: `f ∪ c` is 2-edge-connected.
pub fn is_one_cover(g: &Multigraph, f: &EdgeMultiset, c: &EdgeMultiset) -> bool {
    c.max_mult() <= 1 && is_twoec_multigraph(g, &f.union(c))
}

/// Object classes carried by convex-combination terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectClass {
    SpanningTree,
    Connector,
    TJoin,
    OneCover,
    Tour,
    TwoecMultigraph,
    TwoecSubgraph,
}

impl ObjectClass {
    /// Context-free check; T-joins and 1-covers need their context and are
    /// checked with [`is_tjoin`] and [`is_one_cover`].
    pub fn holds(self, g: &Multigraph, h: &EdgeMultiset) -> Option<bool> {
        Some(match self {
            ObjectClass::SpanningTree => is_spanning_tree(g, h),
            ObjectClass::Connector => is_connector(g, h),
            ObjectClass::Tour => is_tour(g, h),
            ObjectClass::TwoecMultigraph => is_twoec_multigraph(g, h),
            ObjectClass::TwoecSubgraph => is_twoec_subgraph(g, h),
            ObjectClass::TJoin | ObjectClass::OneCover => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::SpanningTree => "spanning-tree",
            ObjectClass::Connector => "connector",
            ObjectClass::TJoin => "t-join",
            ObjectClass::OneCover => "one-cover",
            ObjectClass::Tour => "tour",
            ObjectClass::TwoecMultigraph => "twoec-multigraph",
            ObjectClass::TwoecSubgraph => "twoec-subgraph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Profile {
    #[serde(rename = "cubic-3ec")]
    Cubic3ec,
    #[serde(rename = "subcubic-2ec")]
    Subcubic2ec,
    #[serde(rename = "bipartite-cubic-3ec")]
    BipartiteCubic3ec,
    #[serde(rename = "4regular-4ec")]
    FourRegular4ec,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Cubic3ec => "cubic-3ec",
            Profile::Subcubic2ec => "subcubic-2ec",
            Profile::BipartiteCubic3ec => "bipartite-cubic-3ec",
            Profile::FourRegular4ec => "4regular-4ec",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cubic-3ec" => Ok(Profile::Cubic3ec),
            "subcubic-2ec" => Ok(Profile::Subcubic2ec),
            "bipartite-cubic-3ec" => Ok(Profile::BipartiteCubic3ec),
            "4regular-4ec" => Ok(Profile::FourRegular4ec),
            _ => Err(Error::Precondition(format!("unknown profile {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `None` for graphs with fewer than 2 vertices.
    pub edge_connectivity: Option<usize>,
    /// Edges of one minimum cut.
    pub min_cut_edges: Vec<usize>,
    pub bipartite: bool,
    pub odd_cycle: Option<Vec<usize>>,
}

/// Degree profile, exact edge connectivity and bipartiteness.
pub fn structure_report(g: &Multigraph) -> StructureReport {
    let degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let (edge_connectivity, min_cut_edges) = if g.n() >= 2 {
        let cap = vec![Rat::one(); g.m()];
        let (value, shore) = min_cut(g, &cap).expect("n >= 2");
        let mut mask = vec![false; g.n()];
        for v in shore {
            mask[v] = true;
        }
        (value.to_integer().to_usize(), g.cut_edges(&mask))
    } else {
        (None, Vec::new())
    };
    let odd_cycle = g.bipartition().err();
    StructureReport {
        n: g.n(),
        m: g.m(),
        min_degree: degs.iter().copied().min().unwrap_or(0),
        max_degree: degs.iter().copied().max().unwrap_or(0),
        edge_connectivity,
        min_cut_edges,
        bipartite: odd_cycle.is_none(),
        odd_cycle,
    }
}

fn fmt_edge_set(ids: &[usize]) -> String {
    let parts: Vec<String> = ids.iter().map(|id| format!("e{id}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Report for `g` if it satisfies `profile`; otherwise the first violation.
pub fn validate_structure(g: &Multigraph, profile: Profile) -> Result<StructureReport> {
    let fail = |reason: String| Error::Profile { profile: profile.name().into(), reason };
    if g.n() == 0 {
        return Err(fail("graph is empty".into()));
    }
    let (deg_ok, connectivity): (fn(usize) -> bool, usize) = match profile {
        Profile::Cubic3ec | Profile::BipartiteCubic3ec => (|d| d == 3, 3),
        Profile::Subcubic2ec => (|d| d <= 3, 2),
        Profile::FourRegular4ec => (|d| d == 4, 4),
    };
    if let Some(v) = (0..g.n()).find(|&v| !deg_ok(g.degree(v))) {
        return Err(fail(format!("vertex {v} has degree {}", g.degree(v))));
    }
    let report = structure_report(g);
    match report.edge_connectivity {
        None => return Err(fail("fewer than 2 vertices".into())),
        Some(0) => return Err(fail("graph is disconnected".into())),
        Some(k) if k < connectivity => {
            return Err(fail(format!("{k}-edge cut {}", fmt_edge_set(&report.min_cut_edges))));
        }
        _ => {}
    }
    if profile == Profile::BipartiteCubic3ec {
        if let Some(c) = &report.odd_cycle {
            return Err(fail(format!("odd cycle {c:?}")));
        }
    }
    Ok(report)
}
