//! Subtour elimination LP by cutting planes.
//!
//! The LP `min wᵀx, x(δ(S)) ≥ 2, x ≥ 0` is solved through its dual packing
//! problem `max Σ 2y_S, Σ_{S: e ∈ δ(S)} y_S ≤ w_e, y ≥ 0`, whose columns are
//! cuts. Vertex stars are loaded first; further cuts come from an exact global
//! minimum cut on the current primal point `x = −π`.

use crate::cuts::{Cut, CutFamily};
use crate::error::{Error, Result};
use crate::graph::{EdgeVector, Multigraph};
use crate::lp::mincut::min_cut;
use crate::lp::simplex::{ColumnLp, Column};
use crate::rational::{int, serde_rat, Rat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A cut found violated during separation, with its value at that time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatedCut {
    pub shore: Vec<usize>,
    pub edges: Vec<usize>,
    #[serde(with = "serde_rat")]
    pub value: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpResult {
    #[serde(with = "serde_rat")]
    pub value: Rat,
    pub x: EdgeVector,
    /// Generated cuts that are tight at `x`.
    pub active_cuts: CutFamily,
    pub cut_history: Vec<SeparatedCut>,
    pub pivots: usize,
}

fn cut_column(cut: &Cut) -> Column {
    cut.edges.iter().map(|&e| (e, Rat::from_integer(1.into()))).collect()
}

pub fn solve_subtour(g: &Multigraph) -> Result<LpResult> {
    if g.n() < 3 {
        return Err(Error::Precondition(format!("subtour LP needs n >= 3, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("disconnected input".into()));
    }
    let m = g.m();
    let mut lp = ColumnLp::new(g.weights(), vec![Rat::zero(); m])?;
    let mut cuts: Vec<Cut> = Vec::new();
    for v in 0..g.n() {
        let cut = Cut::from_shore(g, &[v]);
        if !cuts.contains(&cut) {
            lp.add_column(cut_column(&cut), int(-2));
            cuts.push(cut);
        }
    }
    let mut history = Vec::new();
    let mut separation_error = None;
    lp.solve(
        |duals| {
            let x: Vec<Rat> = duals.iter().map(|d| -d).collect();
            match min_cut(g, &x) {
                Ok((value, shore)) if value < int(2) => {
                    let cut = Cut::from_shore(g, &shore);
                    history.push(SeparatedCut { shore: cut.shore.clone(), edges: cut.edges.clone(), value });
                    let col = cut_column(&cut);
                    cuts.push(cut);
                    Some((col, int(-2)))
                }
                Ok(_) => None,
                Err(e) => {
                    separation_error = Some(e);
                    None
                }
            }
        },
        |_| false,
    )?;
    if let Some(e) = separation_error {
        return Err(e);
    }
    let x = EdgeVector(lp.duals().iter().map(|d| -d).collect());
    let value = -lp.objective();
    let mut active: Vec<Cut> = cuts
        .into_iter()
        .filter(|c| x.sum_over(&c.edges) == int(2))
        .collect();
    active.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.edges.cmp(&b.edges)));
    active.dedup();
    Ok(LpResult { value, x, active_cuts: CutFamily { cuts: active }, cut_history: history, pivots: lp.pivots })
}
