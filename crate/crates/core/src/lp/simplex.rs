//! Revised simplex over exact rationals with delayed column generation.
//!
//! Problems are in standard form `min cᵀz, Az = b, z ≥ 0` with `b ≥ 0` and an
//! initial identity basis (slack or artificial columns). Entering columns are
//! chosen by Bland's rule over the existing columns and only then requested
//! from a pricing oracle; the leaving row is chosen by the lexicographic ratio
//! test, so the method never cycles.

use crate::error::{Error, Result};
use crate::rational::Rat;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Sparse column: `(row, coefficient)` pairs.
pub type Column = Vec<(usize, Rat)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    /// Stopped by the caller's predicate on the objective.
    Stopped,
}

#[derive(Debug, Clone)]
pub struct ColumnLp {
    rows: usize,
    cols: Vec<Column>,
    cost: Vec<Rat>,
    binv: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    xb: Vec<Rat>,
    basic_row: Vec<Option<usize>>,
    pub pivots: usize,
}

impl ColumnLp {
    /// LP with right-hand side `b` and one identity column per row with the
    /// given costs; the identity columns form the starting basis.
    pub fn new(b: Vec<Rat>, identity_cost: Vec<Rat>) -> Result<Self> {
        if b.iter().any(|v| v.is_negative()) {
            return Err(Error::Lp("right-hand side must be nonnegative".into()));
        }
        let rows = b.len();
        let mut lp = ColumnLp {
            rows,
            cols: Vec::new(),
            cost: Vec::new(),
            binv: (0..rows)
                .map(|i| (0..rows).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
                .collect(),
            basis: (0..rows).collect(),
            xb: b,
            basic_row: Vec::new(),
            pivots: 0,
        };
        for (i, c) in identity_cost.into_iter().enumerate() {
            lp.push(vec![(i, Rat::one())], c);
            lp.basic_row[i] = Some(i);
        }
        Ok(lp)
    }

    fn push(&mut self, col: Column, cost: Rat) -> usize {
        self.cols.push(col);
        self.cost.push(cost);
        self.basic_row.push(None);
        self.cols.len() - 1
    }

    pub fn add_column(&mut self, col: Column, cost: Rat) -> usize {
        self.push(col, cost)
    }

    pub fn num_columns(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &Column {
        &self.cols[j]
    }

    /// Simplex multipliers `c_Bᵀ B⁻¹`.
    pub fn duals(&self) -> Vec<Rat> {
        let mut y = vec![Rat::zero(); self.rows];
        for (r, &j) in self.basis.iter().enumerate() {
            let c = &self.cost[j];
            if c.is_zero() {
                continue;
            }
            for (k, yk) in y.iter_mut().enumerate() {
                if !self.binv[r][k].is_zero() {
                    *yk += c * &self.binv[r][k];
                }
            }
        }
        y
    }

    pub fn reduced_cost(&self, col: &Column, cost: &Rat, duals: &[Rat]) -> Rat {
        col.iter().fold(cost.clone(), |acc, (i, a)| acc - &duals[*i] * a)
    }

    pub fn objective(&self) -> Rat {
        self.basis
            .iter()
            .zip(&self.xb)
            .fold(Rat::zero(), |acc, (&j, v)| acc + &self.cost[j] * v)
    }

    /// Value of every column in the current basic solution.
    pub fn primal(&self) -> Vec<Rat> {
        let mut z = vec![Rat::zero(); self.cols.len()];
        for (r, &j) in self.basis.iter().enumerate() {
            z[j] = self.xb[r].clone();
        }
        z
    }

    fn ftran(&self, col: &Column) -> Vec<Rat> {
        let mut u = vec![Rat::zero(); self.rows];
        for (i, a) in col {
            for (r, ur) in u.iter_mut().enumerate() {
                if !self.binv[r][*i].is_zero() {
                    *ur += &self.binv[r][*i] * a;
                }
            }
        }
        u
    }

    /// Lexicographically smallest row of `(xb_r, B⁻¹_r) / u_r` over `u_r > 0`.
    fn leaving_row(&self, u: &[Rat]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for r in (0..self.rows).filter(|&r| u[r].is_positive()) {
            best = Some(match best {
                None => r,
                Some(b) => {
                    if self.lex_cmp(r, b, u) == Ordering::Less {
                        r
                    } else {
                        b
                    }
                }
            });
        }
        best
    }

    fn lex_cmp(&self, r: usize, s: usize, u: &[Rat]) -> Ordering {
        // compare a/u_r with b/u_s via a*u_s vs b*u_r (both u positive)
        let c = (&self.xb[r] * &u[s]).cmp(&(&self.xb[s] * &u[r]));
        if c != Ordering::Equal {
            return c;
        }
        for k in 0..self.rows {
            let c = (&self.binv[r][k] * &u[s]).cmp(&(&self.binv[s][k] * &u[r]));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }

    fn pivot(&mut self, enter: usize, row: usize, u: &[Rat]) {
        let p = u[row].clone();
        for v in self.binv[row].iter_mut() {
            *v /= &p;
        }
        self.xb[row] /= &p;
        let prow = self.binv[row].clone();
        let pxb = self.xb[row].clone();
        for r in 0..self.rows {
            if r == row || u[r].is_zero() {
                continue;
            }
            let f = &u[r];
            for (k, v) in self.binv[r].iter_mut().enumerate() {
                if !prow[k].is_zero() {
                    *v -= f * &prow[k];
                }
            }
            self.xb[r] -= f * &pxb;
        }
        let leave = self.basis[row];
        self.basic_row[leave] = None;
        self.basic_row[enter] = Some(row);
        self.basis[row] = enter;
        self.pivots += 1;
    }

    /// Runs the simplex. `oracle` receives the current multipliers and returns
    /// a new column with negative reduced cost, or `None` when none exists.
    /// `stop` is checked on the objective after each pivot.
    pub fn solve<O, S>(&mut self, mut oracle: O, stop: S) -> Result<Status>
    where
        O: FnMut(&[Rat]) -> Option<(Column, Rat)>,
        S: Fn(&Rat) -> bool,
    {
        loop {
            if stop(&self.objective()) {
                return Ok(Status::Stopped);
            }
            let y = self.duals();
            let existing = (0..self.cols.len()).find(|&j| {
                self.basic_row[j].is_none() && self.reduced_cost(&self.cols[j], &self.cost[j], &y).is_negative()
            });
            let enter = match existing {
                Some(j) => j,
                None => match oracle(&y) {
                    None => return Ok(Status::Optimal),
                    Some((col, cost)) => {
                        if !self.reduced_cost(&col, &cost, &y).is_negative() {
                            return Err(Error::Lp("pricing oracle returned a non-improving column".into()));
                        }
                        self.push(col, cost)
                    }
                },
            };
            let u = self.ftran(&self.cols[enter]);
            let row = self.leaving_row(&u).ok_or_else(|| Error::Lp("unbounded".into()))?;
            self.pivot(enter, row, &u);
        }
    }
}
