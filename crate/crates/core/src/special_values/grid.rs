//! Surface data for `zeta_2^{(n)}(0, x | w_1, w_2)` over a rectangle of periods.

use super::assemble::barnes_deriv_nonpos;
use crate::context::EvalContext;
use crate::error::{Result, ZetaError};
use crate::exact::{to_f64, BigRational, PeriodVector};
use crate::fmt17;
use crate::reduction::best_convergent;
use std::thread;

pub const GRID_MAX_DEN: u64 = 100;

/// Rationalized node positions and row-major values `values[i][j]` at `(w1[i], w2[j])`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub w1: Vec<BigRational>,
    pub w2: Vec<BigRational>,
    pub values: Vec<Vec<f64>>,
}

/// Cell midpoints `lo + (i + 1/2) (hi - lo) / steps`, rationalized.
pub fn grid_nodes(range: (f64, f64), steps: usize, max_den: u64) -> Result<Vec<BigRational>> {
    let (lo, hi) = range;
    if steps == 0 || !(lo < hi) {
        return Err(ZetaError::Domain(format!("bad grid range ({lo}, {hi}) with {steps} steps")));
    }
    (0..steps)
        .map(|i| best_convergent(lo + (i as f64 + 0.5) * (hi - lo) / steps as f64, max_den))
        .collect()
}

/// Evaluates `zeta_2^{(n)}(0, x | w_1, w_2)` at every node pair. Rows are
/// shared out across threads; each value is computed independently, so the
/// result does not depend on the schedule.
pub fn barnes_zeta0_grid(
    n: usize,
    x: &BigRational,
    w1_range: (f64, f64),
    w2_range: (f64, f64),
    steps: (usize, usize),
    max_den: u64,
    ctx: &EvalContext,
) -> Result<Grid> {
    for r in [w1_range, w2_range] {
        // midpoint nodes stay strictly inside the closed range
        if !(r.0 >= 0.0 && r.1 <= 1.0) {
            return Err(ZetaError::Domain(format!("period range ({}, {}) must lie in [0, 1]", r.0, r.1)));
        }
    }
    let w1 = grid_nodes(w1_range, steps.0, max_den)?;
    let w2 = grid_nodes(w2_range, steps.1, max_den)?;
    let threads = thread::available_parallelism().map_or(1, |p| p.get()).min(w1.len());
    let row = |a: &BigRational| -> Result<Vec<f64>> {
        w2.iter()
            .map(|b| {
                let w = PeriodVector::new(vec![a.clone(), b.clone()])?;
                barnes_deriv_nonpos(n, 0, 2, x, &w, ctx)
            })
            .collect()
    };
    let mut rows: Vec<Option<Result<Vec<f64>>>> = vec![None; w1.len()];
    thread::scope(|scope| {
        let chunk = w1.len().div_ceil(threads);
        for (slots, nodes) in rows.chunks_mut(chunk).zip(w1.chunks(chunk)) {
            let row = &row;
            scope.spawn(move || {
                for (slot, a) in slots.iter_mut().zip(nodes) {
                    *slot = Some(row(a));
                }
            });
        }
    });
    let values = rows
        .into_iter()
        .map(|r| r.expect("every row is filled"))
        .collect::<Result<Vec<_>>>()?;
    Ok(Grid { w1, w2, values })
}

impl Grid {
    /// `w1,w2,value` rows with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("w1,w2,value\n");
        for (a, row) in self.w1.iter().zip(&self.values) {
            for (b, v) in self.w2.iter().zip(row) {
                out.push_str(&format!("{},{},{}\n", fmt17(to_f64(a)), fmt17(to_f64(b)), fmt17(*v)));
            }
        }
        out
    }

    /// `[[w1, w2, value], ...]` in the same order as the CSV rows.
    pub fn to_rows(&self) -> Vec<[f64; 3]> {
        let mut out = Vec::with_capacity(self.w1.len() * self.w2.len());
        for (a, row) in self.w1.iter().zip(&self.values) {
            for (b, v) in self.w2.iter().zip(row) {
                out.push([to_f64(a), to_f64(b), *v]);
            }
        }
        out
    }
}
