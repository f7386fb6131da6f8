//! Multigraphs with exact rational edge weights, edge multisets and edge
//! vectors, contraction, and the plain-text graph and node-weight formats.

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, is_nonneg, parse_rat, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Rat,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph on vertices `0..n`. Edge ids are positions in the
/// edge list; parallel edges are distinct ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} ({}, {}) has an endpoint outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("edge {id} is a self-loop at {}", e.u)));
            }
            if !is_nonneg(&e.weight) {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} has negative weight {}",
                    fmt_rat(&e.weight)
                )));
            }
            adj[e.u].push(id);
            adj[e.v].push(id);
        }
        Ok(Multigraph { n, edges, adj })
    }

    /// Unit-weight graph from an endpoint list.
    pub fn unweighted(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| Edge { u, v, weight: Rat::one() })
            .collect();
        Multigraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn endpoints(&self, id: EdgeId) -> (usize, usize) {
        (self.edges[id].u, self.edges[id].v)
    }

    pub fn incident(&self, v: usize) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn weights(&self) -> Vec<Rat> {
        self.edges.iter().map(|e| e.weight.clone()).collect()
    }

    pub fn total_weight(&self) -> Rat {
        self.edges.iter().fold(Rat::zero(), |acc, e| acc + &e.weight)
    }

    /// Same topology with edge weights induced by node weights, `w(uv) = f(u) + f(v)`.
    pub fn with_node_weights(&self, f: &NodeWeights) -> Result<Self> {
        if f.len() != self.n {
            return Err(Error::Precondition(format!(
                "node weights have length {} but the graph has {} vertices",
                f.len(),
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { u: e.u, v: e.v, weight: f.induced(e.u, e.v) })
            .collect();
        Multigraph::new(self.n, edges)
    }

    /// True when the edge weights are exactly those induced by `f`.
    pub fn is_node_weighted_by(&self, f: &NodeWeights) -> bool {
        f.len() == self.n && self.edges.iter().all(|e| e.weight == f.induced(e.u, e.v))
    }

    pub fn is_connected(&self) -> bool {
        let all = EdgeMultiset::from_ids(0..self.m());
        is_connected_spanning(self, &all)
    }

    /// Two-colouring, or an odd closed walk witnessing non-bipartiteness.
    pub fn bipartition(&self) -> std::result::Result<Vec<bool>, Vec<usize>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &id in &self.adj[x] {
                    let y = self.edges[id].other(x);
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            parent[y] = x;
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => {
                            return Err(odd_cycle(&parent, x, y));
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Edge ids crossing the shore `S` (given as a membership mask).
    pub fn cut_edges(&self, in_shore: &[bool]) -> Vec<EdgeId> {
        (0..self.m())
            .filter(|&id| {
                let (u, v) = self.endpoints(id);
                in_shore[u] != in_shore[v]
            })
            .collect()
    }
}

fn odd_cycle(parent: &[usize], a: usize, b: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pa = path(a);
    let pb = path(b);
    let meet = *pa.iter().find(|x| pb.contains(x)).unwrap();
    let mut cycle: Vec<usize> = pa.iter().take_while(|&&x| x != meet).copied().collect();
    cycle.push(meet);
    let tail: Vec<usize> = pb.iter().take_while(|&&x| x != meet).copied().collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize, String)>,
}

impl Serialize for Multigraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.iter().map(|e| (e.u, e.v, fmt_rat(&e.weight))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        let edges = repr
            .edges
            .into_iter()
            .map(|(u, v, w)| {
                parse_rat(&w)
                    .map(|weight| Edge { u, v, weight })
                    .map_err(serde::de::Error::custom)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Multigraph::new(repr.n, edges).map_err(serde::de::Error::custom)
    }
}

/// Positive node weights inducing edge weights `f(u) + f(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeWeights(Vec<Rat>);

impl NodeWeights {
    pub fn new(f: Vec<Rat>) -> Result<Self> {
        if let Some((v, w)) = f.iter().enumerate().find(|(_, w)| !(**w > Rat::zero())) {
            return Err(Error::Precondition(format!(
                "node weight of vertex {v} is {} (must be > 0)",
                fmt_rat(w)
            )));
        }
        Ok(NodeWeights(f))
    }

    pub fn uniform(n: usize, value: Rat) -> Result<Self> {
        NodeWeights::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rat {
        &self.0[v]
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    pub fn induced(&self, u: usize, v: usize) -> Rat {
        &self.0[u] + &self.0[v]
    }

    pub fn total(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |acc, w| acc + w)
    }
}

impl Serialize for NodeWeights {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_rat_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for NodeWeights {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = crate::rational::serde_rat_vec::deserialize(d)?;
        NodeWeights::new(v).map_err(serde::de::Error::custom)
    }
}

/// Multiset of edge ids. Zero multiplicities are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeMultiset(BTreeMap<EdgeId, u32>);

impl EdgeMultiset {
    pub fn new() -> Self {
        EdgeMultiset(BTreeMap::new())
    }

    pub fn from_ids(ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut ms = EdgeMultiset::new();
        for id in ids {
            ms.add(id, 1);
        }
        ms
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (EdgeId, u32)>) -> Self {
        let mut ms = EdgeMultiset::new();
        for (id, k) in pairs {
            ms.add(id, k);
        }
        ms
    }

    pub fn mult(&self, id: EdgeId) -> u32 {
        self.0.get(&id).copied().unwrap_or(0)
    }

    pub fn add(&mut self, id: EdgeId, k: u32) {
        if k > 0 {
            *self.0.entry(id).or_insert(0) += k;
        }
    }

    pub fn set(&mut self, id: EdgeId, k: u32) {
        if k == 0 {
            self.0.remove(&id);
        } else {
            self.0.insert(id, k);
        }
    }

    /// Removes one copy; returns false when the edge is absent.
    pub fn remove_one(&mut self, id: EdgeId) -> bool {
        match self.mult(id) {
            0 => false,
            k => {
                self.set(id, k - 1);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, u32)> + '_ {
        self.0.iter().map(|(&id, &k)| (id, k))
    }

    pub fn ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of edge copies, counting multiplicity.
    pub fn size(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn max_mult(&self) -> u32 {
        self.0.values().copied().max().unwrap_or(0)
    }

    pub fn union(&self, other: &EdgeMultiset) -> EdgeMultiset {
        let mut out = self.clone();
        for (id, k) in other.iter() {
            out.add(id, k);
        }
        out
    }

    pub fn times(&self, t: u32) -> EdgeMultiset {
        EdgeMultiset::from_pairs(self.iter().map(|(id, k)| (id, k * t)))
    }

    pub fn weight(&self, g: &Multigraph) -> Rat {
        self.iter()
            .fold(Rat::zero(), |acc, (id, k)| acc + &g.edge(id).weight * Rat::from_integer(k.into()))
    }

    /// Vertex degrees in the multigraph formed by the multiset.
    pub fn degrees(&self, g: &Multigraph) -> Vec<u32> {
        let mut deg = vec![0u32; g.n()];
        for (id, k) in self.iter() {
            let (u, v) = g.endpoints(id);
            deg[u] += k;
            deg[v] += k;
        }
        deg
    }

    pub fn odd_vertices(&self, g: &Multigraph) -> Vec<usize> {
        self.degrees(g)
            .iter()
            .enumerate()
            .filter(|(_, d)| *d % 2 == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Ids repeated by multiplicity, ascending.
    pub fn sequence(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.iter().flat_map(|(id, k)| std::iter::repeat_n(id, k as usize))
    }

    pub fn indicator(&self, m: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); m];
        for (id, k) in self.iter() {
            v[id] = Rat::from_integer(k.into());
        }
        v
    }
}

impl Ord for EdgeMultiset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sequence().cmp(other.sequence())
    }
}

impl PartialOrd for EdgeMultiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for EdgeMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(EdgeId, u32)> = self.iter().collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(EdgeId, u32)>::deserialize(d)?;
        let mut seen = std::collections::BTreeSet::new();
        for &(id, k) in &pairs {
            if k == 0 || !seen.insert(id) {
                return Err(serde::de::Error::custom(format!(
                    "edge {id} listed twice or with multiplicity 0"
                )));
            }
        }
        Ok(EdgeMultiset::from_pairs(pairs))
    }
}

/// Edge-indexed vector of exact rationals (dense over all edge ids).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeVector(#[serde(with = "crate::rational::serde_rat_vec")] pub Vec<Rat>);

impl EdgeVector {
    pub fn zeros(m: usize) -> Self {
        EdgeVector(vec![Rat::zero(); m])
    }

    pub fn everywhere(m: usize, r: Rat) -> Self {
        EdgeVector(vec![r; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, id: EdgeId) -> &Rat {
        &self.0[id]
    }

    pub fn set(&mut self, id: EdgeId, r: Rat) {
        self.0[id] = r;
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    pub fn support(&self) -> Vec<EdgeId> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn scaled(&self, c: &Rat) -> EdgeVector {
        EdgeVector(self.0.iter().map(|v| v * c).collect())
    }

    pub fn dot(&self, w: &[Rat]) -> Rat {
        self.0.iter().zip(w).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Sum over a set of edge ids.
    pub fn sum_over(&self, ids: &[EdgeId]) -> Rat {
        ids.iter().fold(Rat::zero(), |acc, &i| acc + &self.0[i])
    }

    /// Coordinatewise `self >= other`.
    pub fn dominates(&self, other: &EdgeVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn min_with(&self, cap: &Rat) -> EdgeVector {
        EdgeVector(self.0.iter().map(|v| if v > cap { cap.clone() } else { v.clone() }).collect())
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// True when the edges of `h` connect all vertices of `g`.
pub fn is_connected_spanning(g: &Multigraph, h: &EdgeMultiset) -> bool {
    if g.n() == 0 {
        return false;
    }
    let mut uf = UnionFind::new(g.n());
    let mut comps = g.n();
    for id in h.ids() {
        let (u, v) = g.endpoints(id);
        if uf.union(u, v) {
            comps -= 1;
        }
    }
    comps == 1
}

/// Vertex components of the multigraph formed by `h`, as a label per vertex
/// (labels ordered by smallest member vertex).
pub fn component_labels(g: &Multigraph, h: &EdgeMultiset) -> (usize, Vec<usize>) {
    let mut uf = UnionFind::new(g.n());
    for id in h.ids() {
        let (u, v) = g.endpoints(id);
        uf.union(u, v);
    }
    let mut label = vec![usize::MAX; g.n()];
    let mut root_label = vec![usize::MAX; g.n()];
    let mut k = 0;
    for v in 0..g.n() {
        let r = uf.find(v);
        if root_label[r] == usize::MAX {
            root_label[r] = k;
            k += 1;
        }
        label[v] = root_label[r];
    }
    (k, label)
}

/// Edge ids of `h` whose single copy is a bridge of the multigraph `h`.
pub fn bridges(g: &Multigraph, h: &EdgeMultiset) -> Vec<EdgeId> {
    let n = g.n();
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for id in h.ids() {
        let (u, v) = g.endpoints(id);
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // frame: (vertex, parent edge id, next adjacency index)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (x, pe, next) = stack[top];
            if next < adj[x].len() {
                let (y, id) = adj[x][next];
                stack[top].2 += 1;
                if Some(id) == pe {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    stack.push((y, Some(id), 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let (Some(&(p, _, _)), Some(id)) = (stack.last(), pe) {
                    low[p] = low[p].min(low[x]);
                    if low[x] > disc[p] && h.mult(id) == 1 {
                        out.push(id);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Result of contracting an edge multiset: the quotient multigraph, the map
/// from quotient edge ids to parent edge ids, and the vertex map.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Multigraph,
    pub edge_map: Vec<EdgeId>,
    pub vertex_map: Vec<usize>,
}

impl Contraction {
    pub fn lift(&self, h: &EdgeMultiset) -> EdgeMultiset {
        EdgeMultiset::from_pairs(h.iter().map(|(id, k)| (self.edge_map[id], k)))
    }

    pub fn lift_vector(&self, parent_m: usize, x: &EdgeVector) -> EdgeVector {
        let mut out = EdgeVector::zeros(parent_m);
        for (id, v) in x.values().iter().enumerate() {
            out.set(self.edge_map[id], v.clone());
        }
        out
    }
}

/// `G/F`: vertices joined by edges of `f` are merged; resulting self-loops are
/// dropped and parallel edges kept. Quotient vertices are numbered in order of
/// their smallest original vertex.
pub fn contract(g: &Multigraph, f: &EdgeMultiset) -> Contraction {
    let (k, vertex_map) = component_labels(g, f);
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = (vertex_map[e.u], vertex_map[e.v]);
        if a != b {
            edges.push(Edge { u: a, v: b, weight: e.weight.clone() });
            edge_map.push(id);
        }
    }
    let graph = Multigraph::new(k, edges).expect("contraction preserves validity");
    Contraction { graph, edge_map, vertex_map }
}

/// Parses `n m` followed by `m` lines `u v p/q [mult]`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line: hl, msg: "expected header \"n m\"".into() });
    }
    let parse_usize = |s: &str, line: usize, what: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse { line, msg: format!("invalid {what} {s:?}") })
    };
    let n = parse_usize(fields[0], hl, "vertex count")?;
    let m = parse_usize(fields[1], hl, "edge line count")?;
    let mut edges = Vec::new();
    for _ in 0..m {
        let (ln, l) = lines.next().ok_or(Error::Parse {
            line: hl,
            msg: format!("expected {m} edge lines"),
        })?;
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 3 && f.len() != 4 {
            return Err(Error::Parse { line: ln, msg: "expected \"u v p/q [mult]\"".into() });
        }
        let u = parse_usize(f[0], ln, "vertex")?;
        let v = parse_usize(f[1], ln, "vertex")?;
        let weight = parse_rat(f[2]).map_err(|e| Error::Parse { line: ln, msg: e.to_string() })?;
        let mult = if f.len() == 4 { parse_usize(f[3], ln, "multiplicity")? } else { 1 };
        if mult == 0 {
            return Err(Error::Parse { line: ln, msg: "multiplicity must be at least 1".into() });
        }
        if u >= n || v >= n || u == v {
            return Err(Error::Parse { line: ln, msg: format!("invalid endpoints {u} {v}") });
        }
        if weight < Rat::zero() {
            return Err(Error::Parse { line: ln, msg: "negative weight".into() });
        }
        for _ in 0..mult {
            edges.push(Edge { u, v, weight: weight.clone() });
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse { line: ln, msg: "trailing content after edge lines".into() });
    }
    Multigraph::new(n, edges)
}

/// Canonical text form: runs of consecutive identical edges become one line
/// with a multiplicity; multiplicity 1 is omitted.
pub fn write_graph(g: &Multigraph) -> String {
    let mut groups: Vec<(&Edge, usize)> = Vec::new();
    for e in g.edges() {
        match groups.last_mut() {
            Some((last, k)) if *last == e => *k += 1,
            _ => groups.push((e, 1)),
        }
    }
    let mut out = format!("{} {}\n", g.n(), groups.len());
    for (e, k) in groups {
        let _ = write!(out, "{} {} {}", e.u, e.v, fmt_rat(&e.weight));
        if k > 1 {
            let _ = write!(out, " {k}");
        }
        out.push('\n');
    }
    out
}

/// Node-weight file: one `p/q` per line, vertex order.
pub fn parse_node_weights(text: &str) -> Result<NodeWeights> {
    let mut f = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        f.push(parse_rat(l).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?);
    }
    NodeWeights::new(f)
}

pub fn write_node_weights(f: &NodeWeights) -> String {
    f.values().iter().map(|w| fmt_rat(w) + "\n").collect()
}
