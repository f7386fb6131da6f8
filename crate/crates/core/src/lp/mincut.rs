//! Exact cut and flow routines over rational capacities: Stoer–Wagner global
//! minimum cut, Edmonds–Karp maximum flow, and a Gomory–Hu cut tree built with
//! Gusfield's method.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rational::Rat;
use num_traits::Zero;
use std::collections::VecDeque;

fn capacity_matrix(g: &Multigraph, cap: &[Rat]) -> Vec<Vec<Rat>> {
    let n = g.n();
    let mut w = vec![vec![Rat::zero(); n]; n];
    for (id, e) in g.edges().iter().enumerate() {
        w[e.u][e.v] += &cap[id];
        w[e.v][e.u] += &cap[id];
    }
    w
}

/// Global minimum cut: `min over ∅ ⊂ S ⊂ V of cap(δ(S))` and a shore attaining it.
pub fn min_cut(g: &Multigraph, cap: &[Rat]) -> Result<(Rat, Vec<usize>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition("minimum cut needs at least 2 vertices".into()));
    }
    if cap.len() != g.m() {
        return Err(Error::Precondition("capacity vector length differs from edge count".into()));
    }
    let mut w = capacity_matrix(g, cap);
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(Rat, Vec<usize>)> = None;
    while active.len() > 1 {
        let mut in_a = vec![false; n];
        let mut key = vec![Rat::zero(); n];
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            let sel = if step == 0 {
                active[0]
            } else {
                *active
                    .iter()
                    .filter(|&&v| !in_a[v])
                    .max_by(|&&a, &&b| key[a].cmp(&key[b]).then(b.cmp(&a)))
                    .unwrap()
            };
            in_a[sel] = true;
            prev = last;
            last = sel;
            for &v in &active {
                if !in_a[v] {
                    let add = w[sel][v].clone();
                    key[v] += add;
                }
            }
        }
        let phase_value = key[last].clone();
        if best.as_ref().is_none_or(|(b, _)| phase_value < *b) {
            let mut shore = members[last].clone();
            shore.sort_unstable();
            best = Some((phase_value, shore));
        }
        // merge `last` into `prev`
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &active {
            if v != last && v != prev {
                let add = w[last][v].clone();
                w[prev][v] += &add;
                w[v][prev] += add;
            }
        }
        active.retain(|&v| v != last);
    }
    Ok(best.unwrap())
}

/// Maximum `s`-`t` flow value and the source side of a minimum cut.
pub fn max_flow(g: &Multigraph, cap: &[Rat], s: usize, t: usize) -> (Rat, Vec<bool>) {
    let n = g.n();
    let mut res = capacity_matrix(g, cap);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && (!res[i][j].is_zero() || !res[j][i].is_zero()) {
                adj[i].push(j);
            }
        }
    }
    let mut flow = Rat::zero();
    loop {
        let mut pred = vec![usize::MAX; n];
        pred[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &y in &adj[x] {
                if pred[y] == usize::MAX && res[x][y] > Rat::zero() {
                    pred[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if pred[t] == usize::MAX {
            let side = pred.iter().map(|&p| p != usize::MAX).collect();
            return (flow, side);
        }
        let mut bottleneck: Option<Rat> = None;
        let mut y = t;
        while y != s {
            let x = pred[y];
            if bottleneck.as_ref().is_none_or(|b| res[x][y] < *b) {
                bottleneck = Some(res[x][y].clone());
            }
            y = x;
        }
        let b = bottleneck.unwrap();
        let mut y = t;
        while y != s {
            let x = pred[y];
            res[x][y] -= &b;
            res[y][x] += &b;
            y = x;
        }
        flow += b;
    }
}

/// Gomory–Hu cut tree: `parent[v]` for `v >= 1` (vertex 0 is the root).
pub fn gomory_hu_tree(g: &Multigraph, cap: &[Rat]) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![0usize; n];
    let mut value = vec![Rat::zero(); n];
    for s in 1..n {
        let t = parent[s];
        let (f, side) = max_flow(g, cap, s, t);
        for i in 0..n {
            if i != s && side[i] && parent[i] == t {
                parent[i] = s;
            }
        }
        if side[parent[t]] && t != 0 {
            parent[s] = parent[t];
            parent[t] = s;
            value[s] = value[t].clone();
            value[t] = f;
        } else {
            value[s] = f;
        }
    }
    parent
}

/// Shores of the fundamental cuts of a rooted tree given by parent pointers:
/// for each non-root `v`, the vertex set of the subtree hanging from `v`.
pub fn fundamental_shores(parent: &[usize]) -> Vec<Vec<bool>> {
    let n = parent.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut root = 0;
    for v in 0..n {
        if parent[v] == v {
            root = v;
        } else {
            children[parent[v]].push(v);
        }
    }
    let _ = root;
    (0..n)
        .filter(|&v| parent[v] != v)
        .map(|v| {
            let mut mask = vec![false; n];
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                mask[x] = true;
                stack.extend(children[x].iter().copied());
            }
            mask
        })
        .collect()
}

/// Minimum `cap(δ(S))` over shores with `|S ∩ T|` odd.
pub fn min_t_odd_cut(g: &Multigraph, cap: &[Rat], terminals: &[usize]) -> Option<(Rat, Vec<bool>)> {
    let n = g.n();
    if n < 2 || terminals.is_empty() {
        return None;
    }
    let mut parent = gomory_hu_tree(g, cap);
    parent[0] = 0;
    let mut is_t = vec![false; n];
    for &t in terminals {
        is_t[t] = true;
    }
    let mut best: Option<(Rat, Vec<bool>)> = None;
    for mask in fundamental_shores(&parent) {
        let odd = (0..n).filter(|&v| mask[v] && is_t[v]).count() % 2 == 1;
        if !odd {
            continue;
        }
        let value = g
            .cut_edges(&mask)
            .iter()
            .fold(Rat::zero(), |acc, &id| acc + &cap[id]);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, mask));
        }
    }
    best
}
