//! Exact convex decompositions of edge vectors into spanning trees,
//! connectors, T-joins, 1-covers and tours.
//!
//! Dominated decompositions solve the packing LP `max Σμ, Σ μ_j χ_j ≤ target`
//! by column generation with an exact pricing routine for the object class,
//! stopping as soon as `Σμ ≥ 1`. Equality decompositions into connectors
//! use a phase-1 LP over `[χ; 1]`.

use crate::classify::{is_one_cover, is_tjoin, ObjectClass};
use crate::error::{Error, Result};
use crate::graph::{bridges, is_connected_spanning, EdgeId, EdgeMultiset, EdgeVector, Multigraph, UnionFind};
use crate::lp::membership::{membership, one_edge_cut_shores, Polyhedron};
use crate::lp::simplex::{Column, ColumnLp};
use crate::rational::{fmt_rat, int, rat, scale_to_i128, serde_rat, Rat};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "serde_rat")]
    pub lambda: Rat,
    pub edges: EdgeMultiset,
    pub class: ObjectClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equals,
    DominatedBy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexCombination {
    pub terms: Vec<Term>,
    pub target: EdgeVector,
    pub relation: Relation,
}

/// Context needed to check classes that depend on more than the graph.
#[derive(Debug, Clone, Default)]
pub enum ClassContext {
    #[default]
    None,
    Terminals(Vec<usize>),
    Connector(EdgeMultiset),
}

impl ConvexCombination {
    pub fn single(edges: EdgeMultiset, class: ObjectClass, target: EdgeVector, relation: Relation) -> Self {
        ConvexCombination { terms: vec![Term { lambda: Rat::one(), edges, class }], target, relation }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lambda_sum(&self) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, t| acc + &t.lambda)
    }

    /// `Σ λ_i χ(object_i)` over `m` edges.
    pub fn combined(&self, m: usize) -> EdgeVector {
        let mut v = vec![Rat::zero(); m];
        for t in &self.terms {
            for (id, k) in t.edges.iter() {
                v[id] += &t.lambda * Rat::from_integer(k.into());
            }
        }
        EdgeVector(v)
    }

    /// Merges identical objects, summing their coefficients.
    pub fn merge_duplicates(&mut self) {
        let mut map: BTreeMap<EdgeMultiset, (Rat, ObjectClass)> = BTreeMap::new();
        for t in self.terms.drain(..) {
            map.entry(t.edges)
                .and_modify(|(l, _)| *l += &t.lambda)
                .or_insert((t.lambda, t.class));
        }
        self.terms = map
            .into_iter()
            .filter(|(_, (l, _))| l.is_positive())
            .map(|(edges, (lambda, class))| Term { lambda, edges, class })
            .collect();
    }

    /// Carathéodory reduction: rewrites the combination with affinely
    /// independent objects, keeping `Σλχ` and `Σλ` unchanged, so at most
    /// `m + 1` terms remain.
    pub fn reduce(&mut self, m: usize) {
        self.merge_duplicates();
        if self.terms.len() <= 1 {
            return;
        }
        let terms = std::mem::take(&mut self.terms);
        let mut basis = AffineBasis::new(m + 1);
        let mut kept: Vec<Term> = Vec::new();
        for mut t in terms {
            let v = lifted(&t.edges, m);
            match basis.express(&v) {
                None => {
                    basis.push(v);
                    kept.push(t);
                }
                Some(c) => {
                    // v_new − Σ c_j v_j = 0; move along it until a coefficient hits 0
                    let mut step = t.lambda.clone();
                    let mut leave: Option<usize> = None;
                    for (j, cj) in c.iter().enumerate() {
                        if cj.is_negative() {
                            let s = -&kept[j].lambda / cj;
                            if s < step {
                                step = s;
                                leave = Some(j);
                            }
                        }
                    }
                    t.lambda -= &step;
                    for (j, cj) in c.iter().enumerate() {
                        if !cj.is_zero() {
                            let d = &step * cj;
                            kept[j].lambda += d;
                        }
                    }
                    if let Some(j) = leave {
                        kept[j].lambda = Rat::zero();
                        basis.exchange(j, &c, v);
                        kept[j] = t;
                    }
                }
            }
        }
        kept.retain(|t| t.lambda.is_positive());
        kept.sort_by(|a, b| a.edges.cmp(&b.edges));
        self.terms = kept;
    }

    /// Exact re-verification: positive coefficients summing to 1, the
    /// relation against the target, each object's class, and the term bound.
    pub fn verify(&self, g: &Multigraph, ctx: &ClassContext) -> Result<()> {
        let fail = |m: String| Err(Error::Verification(m));
        if self.terms.is_empty() {
            return fail("empty combination".into());
        }
        if self.target.len() != g.m() {
            return fail("target length differs from edge count".into());
        }
        if let Some((i, t)) = self.terms.iter().enumerate().find(|(_, t)| !t.lambda.is_positive()) {
            return fail(format!("term {i} has nonpositive coefficient {}", fmt_rat(&t.lambda)));
        }
        let s = self.lambda_sum();
        if s != Rat::one() {
            return fail(format!("coefficients sum to {}", fmt_rat(&s)));
        }
        if let Some(t) = self.terms.iter().find(|t| t.edges.ids().any(|id| id >= g.m())) {
            return fail(format!("term uses an edge outside the graph: {:?}", t.edges));
        }
        let v = self.combined(g.m());
        for e in 0..g.m() {
            let ok = match self.relation {
                Relation::Equals => v.get(e) == self.target.get(e),
                Relation::DominatedBy => v.get(e) <= self.target.get(e),
            };
            if !ok {
                return fail(format!(
                    "edge {e}: combination gives {} against target {}",
                    fmt_rat(v.get(e)),
                    fmt_rat(self.target.get(e))
                ));
            }
        }
        for (i, t) in self.terms.iter().enumerate() {
            let ok = match (t.class, ctx) {
                (ObjectClass::TJoin, ClassContext::Terminals(tt)) => is_tjoin(g, &t.edges, tt),
                (ObjectClass::OneCover, ClassContext::Connector(f)) => is_one_cover(g, f, &t.edges),
                (ObjectClass::TJoin | ObjectClass::OneCover, _) => {
                    return fail(format!("term {i}: class {} needs context", t.class.name()));
                }
                (c, _) => c.holds(g, &t.edges).unwrap_or(false),
            };
            if !ok {
                return fail(format!("term {i} is not a {}", t.class.name()));
            }
        }
        if self.terms.len() > g.m() + 1 {
            return fail(format!("{} terms exceed |E| + 1 = {}", self.terms.len(), g.m() + 1));
        }
        Ok(())
    }
}

fn lifted(h: &EdgeMultiset, m: usize) -> Vec<Rat> {
    let mut v = h.indicator(m);
    v.push(Rat::one());
    v
}

/// Linearly independent vectors `v_0..v_{r-1}` with an echelon form
/// `E = T·V` used to express new vectors in terms of the `v_j`.
struct AffineBasis {
    dim: usize,
    /// Echelon rows with their pivot column.
    rows: Vec<(usize, Vec<Rat>)>,
    /// `t[k][j]`: coefficient of `v_j` in echelon row `k`.
    t: Vec<Vec<Rat>>,
}

impl AffineBasis {
    fn new(dim: usize) -> Self {
        AffineBasis { dim, rows: Vec::new(), t: Vec::new() }
    }

    /// Reduces `v` against the echelon rows; returns the residue and the
    /// multipliers used per echelon row.
    fn reduce(&self, v: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut res = v.to_vec();
        let mut d = vec![Rat::zero(); self.rows.len()];
        for (k, (p, row)) in self.rows.iter().enumerate() {
            if res[*p].is_zero() {
                continue;
            }
            let f = &res[*p] / &row[*p];
            for c in 0..self.dim {
                if !row[c].is_zero() {
                    res[c] -= &f * &row[c];
                }
            }
            d[k] = f;
        }
        (res, d)
    }

    /// Coefficients `c` with `v = Σ c_j v_j`, or `None` when independent.
    fn express(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let (res, d) = self.reduce(v);
        if res.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let r = self.t.len();
        let mut c = vec![Rat::zero(); r];
        for (k, dk) in d.iter().enumerate() {
            if dk.is_zero() {
                continue;
            }
            for j in 0..r {
                if !self.t[k][j].is_zero() {
                    c[j] += dk * &self.t[k][j];
                }
            }
        }
        Some(c)
    }

    fn push(&mut self, v: Vec<Rat>) {
        let (res, d) = self.reduce(&v);
        let p = res.iter().position(|x| !x.is_zero()).expect("vector is independent");
        let r = self.t.len();
        for row in self.t.iter_mut() {
            row.push(Rat::zero());
        }
        // res = v − Σ_k d_k E_k = v_r − Σ_k d_k Σ_j t_kj v_j
        let mut trow = vec![Rat::zero(); r + 1];
        trow[r] = Rat::one();
        for (k, dk) in d.iter().enumerate() {
            if dk.is_zero() {
                continue;
            }
            for j in 0..r {
                if !self.t[k][j].is_zero() {
                    trow[j] -= dk * &self.t[k][j];
                }
            }
        }
        self.rows.push((p, res));
        self.t.push(trow);
    }

    /// Replaces `v_i` by `v_new = Σ c_j v_j` (requires `c_i ≠ 0`).
    fn exchange(&mut self, i: usize, c: &[Rat], _v_new: Vec<Rat>) {
        let ci = c[i].clone();
        for row in self.t.iter_mut() {
            let tki = &row[i] / &ci;
            if tki.is_zero() {
                continue;
            }
            for (j, cj) in c.iter().enumerate() {
                if j != i && !cj.is_zero() {
                    row[j] -= &tki * cj;
                }
            }
            row[i] = tki;
        }
    }
}

/// Solves `max Σμ, Σ μ_j χ_j ≤ target` over `rows` (support edges) with
/// `price` returning a minimum-price object for a nonnegative price vector.
/// Returns the normalized combination once `Σμ ≥ 1`, or `None` if the
/// packing value stays below 1.
fn pack<P>(m: usize, target: &EdgeVector, rows: &[EdgeId], mut price: P) -> Result<Option<Vec<(Rat, EdgeMultiset)>>>
where
    P: FnMut(&[Rat]) -> Option<EdgeMultiset>,
{
    let mut row_of = vec![usize::MAX; m];
    for (r, &e) in rows.iter().enumerate() {
        row_of[e] = r;
    }
    let b: Vec<Rat> = rows.iter().map(|&e| target.get(e).clone()).collect();
    let mut lp = ColumnLp::new(b, vec![Rat::zero(); rows.len()])?;
    let base = lp.num_columns();
    let mut objects: Vec<EdgeMultiset> = Vec::new();
    let mut bad_object = None;
    let status = lp.solve(
        |duals| {
            let mut p = vec![Rat::zero(); m];
            for (r, &e) in rows.iter().enumerate() {
                p[e] = -&duals[r];
            }
            let obj = price(&p)?;
            let cost = obj.iter().fold(Rat::zero(), |acc, (id, k)| acc + &p[id] * Rat::from_integer(k.into()));
            if cost >= Rat::one() {
                return None;
            }
            let mut col: Column = Vec::new();
            for (id, k) in obj.iter() {
                if row_of[id] == usize::MAX {
                    bad_object = Some(id);
                    return None;
                }
                col.push((row_of[id], Rat::from_integer(k.into())));
            }
            objects.push(obj);
            Some((col, int(-1)))
        },
        |obj| *obj <= int(-1),
    )?;
    if let Some(id) = bad_object {
        return Err(Error::Lp(format!("pricing used edge {id} outside the support")));
    }
    let total = -lp.objective();
    if total < Rat::one() {
        return Ok(None);
    }
    let _ = status;
    let z = lp.primal();
    let mut out = Vec::new();
    for (k, obj) in objects.into_iter().enumerate() {
        let mu = &z[base + k];
        if mu.is_positive() {
            out.push((mu / &total, obj));
        }
    }
    Ok(Some(out))
}

fn finish(
    g: &Multigraph,
    parts: Vec<(Rat, EdgeMultiset)>,
    class: ObjectClass,
    target: EdgeVector,
    relation: Relation,
) -> ConvexCombination {
    let mut cc = ConvexCombination {
        terms: parts.into_iter().map(|(lambda, edges)| Term { lambda, edges, class }).collect(),
        target,
        relation,
    };
    cc.reduce(g.m());
    cc
}

/// The multiset with multiplicities `x`, when `x` is a nonnegative integer vector.
fn integral_multiset(x: &EdgeVector) -> Option<EdgeMultiset> {
    let mut h = EdgeMultiset::new();
    for (e, v) in x.values().iter().enumerate() {
        if !v.is_integer() || v.is_negative() {
            return None;
        }
        h.add(e, u32::try_from(v.to_integer()).ok()?);
    }
    Some(h)
}

fn check_len(g: &Multigraph, x: &EdgeVector) -> Result<()> {
    if x.len() != g.m() {
        return Err(Error::Precondition(format!(
            "vector has {} entries but the graph has {} edges",
            x.len(),
            g.m()
        )));
    }
    Ok(())
}

/// Minimum-price spanning tree of the edges in `allowed` (Kruskal, ties by id).
pub fn min_spanning_tree(g: &Multigraph, price: &[Rat], allowed: &[EdgeId]) -> Option<EdgeMultiset> {
    let mut order: Vec<EdgeId> = allowed.to_vec();
    order.sort_by(|&a, &b| price[a].cmp(&price[b]).then(a.cmp(&b)));
    let mut uf = UnionFind::new(g.n());
    let mut tree = EdgeMultiset::new();
    let mut joined = 0;
    for e in order {
        let (u, v) = g.endpoints(e);
        if uf.union(u, v) {
            tree.add(e, 1);
            joined += 1;
        }
    }
    (joined + 1 == g.n()).then_some(tree)
}

/// Convex combination of spanning trees dominated by `x ∈ Subtour(G)`.
pub fn decompose_spanning_trees(g: &Multigraph, x: &EdgeVector) -> Result<ConvexCombination> {
    check_len(g, x)?;
    if g.n() == 1 {
        return Ok(ConvexCombination::single(EdgeMultiset::new(), ObjectClass::SpanningTree, x.clone(), Relation::DominatedBy));
    }
    membership(g, x, &Polyhedron::Subtour)?.into_result(&Polyhedron::Subtour)?;
    let support = x.support();
    let parts = pack(g.m(), x, &support, |p| min_spanning_tree(g, p, &support))?
        .ok_or_else(|| Error::Lp("spanning tree packing value below 1".into()))?;
    Ok(finish(g, parts, ObjectClass::SpanningTree, x.clone(), Relation::DominatedBy))
}

/// Minimum-cost connector for arbitrary-sign costs over `allowed` edges:
/// negative edges doubled, then a minimum spanning forest on the rest.
fn min_cost_connector(g: &Multigraph, cost: &[Rat], allowed: &[EdgeId]) -> Option<EdgeMultiset> {
    let mut h = EdgeMultiset::new();
    let mut uf = UnionFind::new(g.n());
    let mut comps = g.n();
    let mut rest = Vec::new();
    for &e in allowed {
        if cost[e].is_negative() {
            h.add(e, 2);
            let (u, v) = g.endpoints(e);
            if uf.union(u, v) {
                comps -= 1;
            }
        } else {
            rest.push(e);
        }
    }
    rest.sort_by(|&a, &b| cost[a].cmp(&cost[b]).then(a.cmp(&b)));
    for e in rest {
        let (u, v) = g.endpoints(e);
        if uf.union(u, v) {
            h.add(e, 1);
            comps -= 1;
        }
    }
    (comps == 1).then_some(h)
}

/// Equality decomposition of `min(x, 2)` into connectors, for `x ∈ Subtour(G)`.
pub fn decompose_connectors(g: &Multigraph, x: &EdgeVector) -> Result<ConvexCombination> {
    check_len(g, x)?;
    let x = x.min_with(&int(2));
    if g.n() == 1 {
        return Ok(ConvexCombination::single(EdgeMultiset::new(), ObjectClass::Connector, x, Relation::Equals));
    }
    if let Some(h) = integral_multiset(&x) {
        if crate::classify::is_connector(g, &h) {
            return Ok(ConvexCombination::single(h, ObjectClass::Connector, x, Relation::Equals));
        }
    }
    membership(g, &x, &Polyhedron::Subtour)?.into_result(&Polyhedron::Subtour)?;
    let m = g.m();
    let support = x.support();
    // rows 0..m: edges, row m: convexity
    let mut b: Vec<Rat> = x.values().to_vec();
    b.push(Rat::one());
    let mut lp = ColumnLp::new(b, vec![Rat::one(); m + 1])?;
    let base = lp.num_columns();
    let mut objects: Vec<EdgeMultiset> = Vec::new();
    lp.solve(
        |duals| {
            let cost: Vec<Rat> = duals[..m].iter().map(|d| -d).collect();
            let h = min_cost_connector(g, &cost, &support)?;
            let c = h.iter().fold(Rat::zero(), |acc, (id, k)| acc + &cost[id] * Rat::from_integer(k.into()));
            if c >= duals[m] {
                return None;
            }
            let mut col: Column = h.iter().map(|(id, k)| (id, Rat::from_integer(k.into()))).collect();
            col.push((m, Rat::one()));
            objects.push(h);
            Some((col, Rat::zero()))
        },
        |obj| obj.is_zero(),
    )?;
    if !lp.objective().is_zero() {
        return Err(Error::Lp(format!(
            "vector is not in the connector polytope (phase-1 value {})",
            fmt_rat(&lp.objective())
        )));
    }
    let z = lp.primal();
    let parts: Vec<(Rat, EdgeMultiset)> = objects
        .into_iter()
        .enumerate()
        .filter(|(k, _)| z[base + k].is_positive())
        .map(|(k, h)| (z[base + k].clone(), h))
        .collect();
    Ok(finish(g, parts, ObjectClass::Connector, x, Relation::Equals))
}

/// Numeric type for shortest-path and matching dynamic programs.
trait Cost: Clone + Ord + Zero + std::ops::Add<Output = Self> {}
impl Cost for i128 {}
impl Cost for Rat {}

/// Minimum-cost T-join among `allowed` edges with nonnegative costs, by
/// all-pairs shortest paths and a bitmask matching DP over `T`.
fn tjoin_dp<C: Cost>(g: &Multigraph, cost: &[C], allowed: &[EdgeId], t: &[usize]) -> Option<EdgeMultiset> {
    let n = g.n();
    let mut dist: Vec<Vec<Option<C>>> = vec![vec![None; n]; n];
    let mut via: Vec<Vec<usize>> = vec![vec![usize::MAX; n]; n];
    let mut first_edge: Vec<Vec<usize>> = vec![vec![usize::MAX; n]; n];
    for v in 0..n {
        dist[v][v] = Some(C::zero());
    }
    for &e in allowed {
        let (u, v) = g.endpoints(e);
        let better = match &dist[u][v] {
            None => true,
            Some(d) => cost[e] < *d || (cost[e] == *d && e < first_edge[u][v]),
        };
        if better {
            dist[u][v] = Some(cost[e].clone());
            dist[v][u] = Some(cost[e].clone());
            first_edge[u][v] = e;
            first_edge[v][u] = e;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(dik) = dist[i][k].clone() else { continue };
            for j in 0..n {
                let Some(dkj) = dist[k][j].clone() else { continue };
                let cand = dik.clone() + dkj;
                if dist[i][j].as_ref().is_none_or(|d| cand < *d) {
                    dist[i][j] = Some(cand);
                    via[i][j] = k;
                }
            }
        }
    }
    fn path(i: usize, j: usize, via: &[Vec<usize>], first: &[Vec<usize>], out: &mut Vec<EdgeId>) {
        if i == j {
            return;
        }
        let k = via[i][j];
        if k == usize::MAX {
            out.push(first[i][j]);
        } else {
            path(i, k, via, first, out);
            path(k, j, via, first, out);
        }
    }
    let k = t.len();
    if k == 0 {
        return Some(EdgeMultiset::new());
    }
    let full = (1usize << k) - 1;
    // dp over masks of matched terminals, always pairing the lowest unmatched one
    let mut dp: Vec<Option<C>> = vec![None; full + 1];
    let mut choice: Vec<usize> = vec![usize::MAX; full + 1];
    dp[0] = Some(C::zero());
    for mask in 0..full {
        let Some(cur) = dp[mask].clone() else { continue };
        let i = (!mask).trailing_zeros() as usize;
        if i >= k {
            continue;
        }
        for j in i + 1..k {
            if mask & (1 << j) != 0 {
                continue;
            }
            let Some(d) = dist[t[i]][t[j]].clone() else { continue };
            let next = mask | (1 << i) | (1 << j);
            let cand = cur.clone() + d;
            if dp[next].as_ref().is_none_or(|old| cand < *old) {
                dp[next] = Some(cand);
                choice[next] = (i << 8) | j;
            }
        }
    }
    dp[full].as_ref()?;
    let mut counts: BTreeMap<EdgeId, u32> = BTreeMap::new();
    let mut mask = full;
    while mask != 0 {
        let (i, j) = (choice[mask] >> 8, choice[mask] & 0xff);
        let mut edges = Vec::new();
        path(t[i], t[j], &via, &first_edge, &mut edges);
        for e in edges {
            *counts.entry(e).or_insert(0) += 1;
        }
        mask &= !((1 << i) | (1 << j));
    }
    Some(EdgeMultiset::from_ids(counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(e, _)| e)))
}

/// Largest `|T|` handled by the matching DP.
pub const TJOIN_TERMINAL_LIMIT: usize = 22;

fn min_price_tjoin(g: &Multigraph, price: &[Rat], allowed: &[EdgeId], t: &[usize]) -> Result<Option<EdgeMultiset>> {
    if t.len() > TJOIN_TERMINAL_LIMIT {
        return Err(Error::TooLarge(format!("|T| = {} exceeds {TJOIN_TERMINAL_LIMIT}", t.len())));
    }
    let sub: Vec<Rat> = allowed.iter().map(|&e| price[e].clone()).collect();
    Ok(match scale_to_i128(&sub) {
        Some(scaled) if scaled.iter().all(|&v| v <= i128::MAX / 64) => {
            let mut full = vec![0i128; g.m()];
            for (k, &e) in allowed.iter().enumerate() {
                full[e] = scaled[k];
            }
            tjoin_dp(g, &full, allowed, t)
        }
        _ => tjoin_dp(g, price, allowed, t),
    })
}

fn normalize_terminals(g: &Multigraph, t: &[usize]) -> Result<Vec<usize>> {
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    if let Some(&v) = t.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Precondition(format!("terminal {v} is not a vertex")));
    }
    if t.len() % 2 == 1 {
        return Err(Error::Precondition(format!("odd |T| = {}", t.len())));
    }
    Ok(t)
}

/// Minimum-weight T-join of `g` under its edge weights.
pub fn min_tjoin(g: &Multigraph, t: &[usize]) -> Result<EdgeMultiset> {
    let t = normalize_terminals(g, t)?;
    let all: Vec<EdgeId> = (0..g.m()).collect();
    min_price_tjoin(g, &g.weights(), &all, &t)?
        .ok_or_else(|| Error::Precondition("some component holds an odd number of terminals".into()))
}

/// Convex combination of T-joins dominated by `x ∈ T-Join↑(G)`.
pub fn decompose_tjoins(g: &Multigraph, x: &EdgeVector, t: &[usize]) -> Result<ConvexCombination> {
    check_len(g, x)?;
    let t = normalize_terminals(g, t)?;
    if t.is_empty() {
        return Ok(ConvexCombination::single(EdgeMultiset::new(), ObjectClass::TJoin, x.clone(), Relation::DominatedBy));
    }
    let poly = Polyhedron::TJoinUp(t.clone());
    membership(g, x, &poly)?.into_result(&poly)?;
    let support = x.support();
    let mut err = None;
    let parts = pack(g.m(), x, &support, |p| match min_price_tjoin(g, p, &support, &t) {
        Ok(j) => j,
        Err(e) => {
            err = Some(e);
            None
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let parts = parts.ok_or_else(|| Error::Lp("T-join packing value below 1".into()))?;
    Ok(finish(g, parts, ObjectClass::TJoin, x.clone(), Relation::DominatedBy))
}

/// Minimum-price 1-cover of the bridges (given as coverage masks) by exact
/// branch and bound over candidate edges.
fn min_price_cover(cov: &[(EdgeId, u128)], price: &BTreeMap<EdgeId, i128>, nbridges: usize) -> Option<EdgeMultiset> {
    let full: u128 = if nbridges == 128 { u128::MAX } else { (1u128 << nbridges) - 1 };
    let mut by_bridge: Vec<Vec<(i128, EdgeId, u128)>> = vec![Vec::new(); nbridges];
    for &(e, mask) in cov {
        for (b, list) in by_bridge.iter_mut().enumerate() {
            if mask >> b & 1 == 1 {
                list.push((price[&e], e, mask));
            }
        }
    }
    for list in by_bridge.iter_mut() {
        list.sort_unstable();
    }
    struct Search<'a> {
        by_bridge: &'a [Vec<(i128, EdgeId, u128)>],
        full: u128,
        best: Option<(i128, Vec<EdgeId>)>,
        chosen: Vec<EdgeId>,
    }
    fn dfs(s: &mut Search<'_>, covered: u128, cost: i128) {
        if covered == s.full {
            let mut c = s.chosen.clone();
            c.sort_unstable();
            let better = match &s.best {
                None => true,
                Some((bc, be)) => cost < *bc || (cost == *bc && c < *be),
            };
            if better {
                s.best = Some((cost, c));
            }
            return;
        }
        let b = (!covered & s.full).trailing_zeros() as usize;
        let list = s.by_bridge[b].clone();
        for (p, e, mask) in list {
            let next = cost + p;
            if let Some((bc, _)) = &s.best {
                if next > *bc {
                    break;
                }
            }
            s.chosen.push(e);
            dfs(s, covered | mask, next);
            s.chosen.pop();
        }
    }
    let mut s = Search { by_bridge: &by_bridge, full, best: None, chosen: Vec::new() };
    dfs(&mut s, 0, 0);
    s.best.map(|(_, c)| EdgeMultiset::from_ids(c))
}

/// Bridges of `f` with, per candidate edge, the mask of bridges it covers.
fn cover_masks(g: &Multigraph, f: &EdgeMultiset, candidates: &[EdgeId]) -> Result<(usize, Vec<(EdgeId, u128)>)> {
    let shores = one_edge_cut_shores(g, f)?;
    if shores.len() > 128 {
        return Err(Error::TooLarge(format!("{} bridges exceed 128", shores.len())));
    }
    let cov = candidates
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            let mut mask = 0u128;
            for (b, (shore, _)) in shores.iter().enumerate() {
                if shore[u] != shore[v] {
                    mask |= 1 << b;
                }
            }
            (e, mask)
        })
        .filter(|(_, mask)| *mask != 0)
        .collect();
    Ok((shores.len(), cov))
}

/// Convex combination of 1-covers of the connector `f` dominated by
/// `(2/(1+α))·y`, for `y ∈ Cover(G,F)` with every nonzero entry at least `α`.
pub fn decompose_one_covers(g: &Multigraph, f: &EdgeMultiset, y: &EdgeVector, alpha: &Rat) -> Result<ConvexCombination> {
    check_len(g, y)?;
    if !alpha.is_positive() || *alpha > Rat::one() {
        return Err(Error::Precondition(format!("alpha {} is not in (0, 1]", fmt_rat(alpha))));
    }
    if let Some(e) = (0..g.m()).find(|&e| y.get(e).is_positive() && y.get(e) < alpha) {
        return Err(Error::Precondition(format!(
            "y_{e} = {} is below alpha {}",
            fmt_rat(y.get(e)),
            fmt_rat(alpha)
        )));
    }
    if !is_connected_spanning(g, f) || f.max_mult() > 2 {
        return Err(Error::Precondition("F is not a connector".into()));
    }
    let target = y.scaled(&(int(2) / (Rat::one() + alpha)));
    if bridges(g, f).is_empty() {
        return Ok(ConvexCombination::single(EdgeMultiset::new(), ObjectClass::OneCover, target, Relation::DominatedBy));
    }
    let poly = Polyhedron::Cover(f.clone());
    membership(g, y, &poly)?.into_result(&poly)?;
    let support = y.support();
    let (nb, cov) = cover_masks(g, f, &support)?;
    let parts = pack(g.m(), &target, &support, |p| {
        let sub: Vec<Rat> = cov.iter().map(|(e, _)| p[*e].clone()).collect();
        let scaled = scale_to_i128(&sub)?;
        let cap = i128::MAX / (cov.len() as i128 + 1);
        if scaled.iter().any(|&v| v > cap) {
            return None;
        }
        let price: BTreeMap<EdgeId, i128> = cov.iter().map(|(e, _)| *e).zip(scaled).collect();
        min_price_cover(&cov, &price, nb)
    })?
    .ok_or_else(|| Error::Lp("1-cover packing value below 1".into()))?;
    Ok(finish(g, parts, ObjectClass::OneCover, target, Relation::DominatedBy))
}

/// Tours dominated by `(3/2)·x` for `x ∈ Subtour(G)`: spanning trees under
/// `x`, each completed by T-joins on its odd vertices under `x/2`.
pub fn wolsey_tours(g: &Multigraph, x: &EdgeVector) -> Result<ConvexCombination> {
    check_len(g, x)?;
    let target = x.scaled(&rat(3, 2));
    if let Some(h) = integral_multiset(x) {
        if crate::classify::is_tour(g, &h) {
            return Ok(ConvexCombination::single(h, ObjectClass::Tour, target, Relation::DominatedBy));
        }
    }
    let trees = decompose_spanning_trees(g, x)?;
    let half = x.scaled(&rat(1, 2));
    let mut parts = Vec::new();
    for t in &trees.terms {
        let odd = t.edges.odd_vertices(g);
        let joins = decompose_tjoins(g, &half, &odd)?;
        for j in &joins.terms {
            parts.push((&t.lambda * &j.lambda, t.edges.union(&j.edges)));
        }
    }
    Ok(finish(g, parts, ObjectClass::Tour, target, Relation::DominatedBy))
}
