//! Enumeration of small edge cuts.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeMultiset, Multigraph, UnionFind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Largest vertex count handled by shore enumeration.
pub const SHORE_ENUMERATION_LIMIT: usize = 20;

/// An edge cut `δ(S)` with its shore. Shores are canonical: the side with
/// fewer vertices, or the side holding vertex 0 on a tie.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cut {
    pub edges: Vec<EdgeId>,
    pub shore: Vec<usize>,
}

impl Cut {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn from_shore(g: &Multigraph, shore: &[usize]) -> Cut {
        let mut mask = vec![false; g.n()];
        for &v in shore {
            mask[v] = true;
        }
        Cut { edges: g.cut_edges(&mask), shore: canonical_shore(&mask) }
    }

    /// Number of copies of cut edges in `h`.
    pub fn crossing(&self, h: &EdgeMultiset) -> u32 {
        self.edges.iter().map(|&id| h.mult(id)).sum()
    }
}

pub fn canonical_shore(mask: &[bool]) -> Vec<usize> {
    let n = mask.len();
    let inside = mask.iter().filter(|&&b| b).count();
    let take_inside = match (2 * inside).cmp(&n) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => mask[0],
    };
    (0..n).filter(|&v| mask[v] == take_inside).collect()
}

/// Cuts keyed by their edge-id set, ordered by size then edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutFamily {
    pub cuts: Vec<Cut>,
}

impl CutFamily {
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cut> {
        self.cuts.iter()
    }

    pub fn of_size(&self, k: usize) -> impl Iterator<Item = &Cut> {
        self.cuts.iter().filter(move |c| c.size() == k)
    }

    fn from_map(map: BTreeMap<Vec<EdgeId>, Vec<usize>>) -> CutFamily {
        let mut cuts: Vec<Cut> = map.into_iter().map(|(edges, shore)| Cut { edges, shore }).collect();
        cuts.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.edges.cmp(&b.edges)));
        CutFamily { cuts }
    }
}

/// Every cut `δ(S)` with `1 <= |δ(S)| <= k`, each once.
pub fn enumerate_cuts_upto(g: &Multigraph, k: usize) -> Result<CutFamily> {
    if !g.is_connected() {
        return Err(Error::Precondition("cut enumeration needs a connected graph".into()));
    }
    if g.n() <= SHORE_ENUMERATION_LIMIT {
        Ok(enumerate_by_shores(g, k))
    } else {
        Ok(enumerate_by_edge_subsets(g, k))
    }
}

/// Brute force over all shores containing vertex 0.
pub fn enumerate_by_shores(g: &Multigraph, k: usize) -> CutFamily {
    let n = g.n();
    let mut map = BTreeMap::new();
    if n < 2 {
        return CutFamily::default();
    }
    assert!(n <= 63, "shore enumeration is limited to small graphs");
    let ends: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.u as u32, e.v as u32)).collect();
    let full: u64 = (1u64 << n) - 1;
    for rest in 0..(1u64 << (n - 1)) {
        let s = 1 | (rest << 1);
        if s == full {
            continue;
        }
        let mut size = 0;
        for &(u, v) in &ends {
            if ((s >> u) ^ (s >> v)) & 1 == 1 {
                size += 1;
                if size > k {
                    break;
                }
            }
        }
        if size == 0 || size > k {
            continue;
        }
        let mask: Vec<bool> = (0..n).map(|v| (s >> v) & 1 == 1).collect();
        let edges = g.cut_edges(&mask);
        map.entry(edges).or_insert_with(|| canonical_shore(&mask));
    }
    CutFamily::from_map(map)
}

/// Edge subsets of size at most `k` whose removal splits the graph into
/// components that can be two-coloured with every removed edge bichromatic.
pub fn enumerate_by_edge_subsets(g: &Multigraph, k: usize) -> CutFamily {
    let m = g.m();
    let mut map = BTreeMap::new();
    let mut chosen: Vec<EdgeId> = Vec::new();
    fn rec(
        g: &Multigraph,
        k: usize,
        start: usize,
        chosen: &mut Vec<EdgeId>,
        map: &mut BTreeMap<Vec<EdgeId>, Vec<usize>>,
    ) {
        if !chosen.is_empty() {
            if let Some(shore) = cut_shore(g, chosen) {
                map.insert(chosen.clone(), shore);
            }
        }
        if chosen.len() == k {
            return;
        }
        for id in start..g.m() {
            chosen.push(id);
            rec(g, k, id + 1, chosen, map);
            chosen.pop();
        }
    }
    if m > 0 {
        rec(g, k, 0, &mut chosen, &mut map);
    }
    CutFamily::from_map(map)
}

/// Shore `S` with `δ(S) = removed`, if one exists.
fn cut_shore(g: &Multigraph, removed: &[EdgeId]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    let mut is_removed = vec![false; g.m()];
    for &id in removed {
        is_removed[id] = true;
    }
    for (id, e) in g.edges().iter().enumerate() {
        if !is_removed[id] {
            uf.union(e.u, e.v);
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    let mut color: BTreeMap<usize, bool> = BTreeMap::new();
    color.insert(roots[0], true);
    // propagate colours across removed edges until stable
    let mut changed = true;
    while changed {
        changed = false;
        for &id in removed {
            let (u, v) = g.endpoints(id);
            let (ru, rv) = (roots[u], roots[v]);
            if ru == rv {
                return None;
            }
            match (color.get(&ru).copied(), color.get(&rv).copied()) {
                (Some(a), Some(b)) if a == b => return None,
                (Some(a), None) => {
                    color.insert(rv, !a);
                    changed = true;
                }
                (None, Some(b)) => {
                    color.insert(ru, !b);
                    changed = true;
                }
                _ => {}
            }
        }
    }
    let distinct: std::collections::BTreeSet<usize> = roots.iter().copied().collect();
    if distinct.len() < 2 || color.len() != distinct.len() {
        return None;
    }
    let mask: Vec<bool> = (0..n).map(|v| color[&roots[v]]).collect();
    Some(canonical_shore(&mask))
}

/// True when `δ(S)` for the shore given by `mask` is exactly `edges`.
pub fn is_exact_cut(g: &Multigraph, mask: &[bool], edges: &[EdgeId]) -> bool {
    g.cut_edges(mask) == edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, k4, petersen};

    #[test]
    fn k4_has_no_two_edge_cuts() {
        assert!(enumerate_cuts_upto(&k4(), 2).unwrap().is_empty());
    }

    #[test]
    fn c4_has_six_two_edge_cuts() {
        let fam = enumerate_cuts_upto(&cycle(4), 2).unwrap();
        assert_eq!(fam.len(), 6);
        assert!(fam.iter().all(|c| c.size() == 2));
    }

    #[test]
    fn petersen_small_cuts_are_stars_and_edges() {
        let g = petersen();
        let fam = enumerate_cuts_upto(&g, 4).unwrap();
        assert_eq!(fam.of_size(3).count(), 10);
        assert_eq!(fam.of_size(4).count(), 15);
        assert_eq!(fam.len(), 25);
        for c in fam.of_size(3) {
            assert_eq!(c.shore.len(), 1);
        }
        for c in fam.of_size(4) {
            assert_eq!(c.shore.len(), 2);
            let (a, b) = (c.shore[0], c.shore[1]);
            assert!(g.incident(a).iter().any(|&id| g.edge(id).other(a) == b));
        }
    }

    #[test]
    fn both_strategies_agree_on_named_graphs() {
        for g in [k4(), cycle(5), petersen()] {
            for k in 1..=4 {
                assert_eq!(enumerate_by_shores(&g, k), enumerate_by_edge_subsets(&g, k));
            }
        }
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Multigraph::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(enumerate_cuts_upto(&g, 2).is_err());
    }
}
