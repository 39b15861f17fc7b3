//! Bracketed real zeros by Brent's method.

use barnes_zeta::context::EvalContext;
use barnes_zeta::exact::{BigRational, PeriodVector};
use barnes_zeta::reduction::decompose;
use barnes_zeta::{Result, ZetaError};
use num_complex::Complex64;
use roots::{find_root_brent, Convergency, SearchError};
use serde::Serialize;
use std::cell::RefCell;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroReport {
    pub s_root: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
}

/// Stops once the bracket is a few ulps wide (absolute below 1); remembers the last bracket
/// and the iteration count, which the solver does not report. The first
/// convergence query of each iteration is the bracket; later ones compare
/// older iterates.
struct Tracker {
    max_iter: usize,
    iterations: usize,
    last: (f64, f64),
    fresh: bool,
}

impl Convergency<f64> for Tracker {
    fn is_root_found(&mut self, y: f64) -> bool {
        y == 0.0
    }

    fn is_converged(&mut self, x1: f64, x2: f64) -> bool {
        if self.fresh {
            self.last = (x1.min(x2), x1.max(x2));
            self.fresh = false;
        }
        (x1 - x2).abs() <= 2.0 * f64::EPSILON * x1.abs().max(x2.abs()).max(1.0)
    }

    fn is_iteration_limit_reached(&mut self, iter: usize) -> bool {
        self.iterations = iter;
        self.fresh = true;
        iter >= self.max_iter
    }
}

/// Zero of `f` in `[lo, hi]`. The residual `|f(s_root)|` must not exceed `tol`.
pub fn find_zero(mut f: impl FnMut(f64) -> Result<f64>, lo: f64, hi: f64, tol: f64) -> Result<ZeroReport> {
    if !(lo < hi) {
        return Err(ZetaError::Domain(format!("empty bracket [{lo}, {hi}]")));
    }
    let error = RefCell::new(None);
    let seen = RefCell::new(Vec::<(f64, f64)>::new());
    let mut eval = |s: f64| -> f64 {
        if let Some(&(_, v)) = seen.borrow().iter().find(|(x, _)| *x == s) {
            return v;
        }
        let v = match f(s) {
            Ok(v) => v,
            Err(e) => {
                error.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        };
        seen.borrow_mut().push((s, v));
        v
    };
    let (f_lo, f_hi) = (eval(lo), eval(hi));
    if let Some(e) = error.borrow_mut().take() {
        return Err(e);
    }
    if f_lo * f_hi > 0.0 {
        return Err(ZetaError::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let mut tracker = Tracker {
        max_iter: 200,
        iterations: 0,
        last: (lo, hi),
        fresh: true,
    };
    let found = find_root_brent(lo, hi, &mut eval, &mut tracker);
    if let Some(e) = error.borrow_mut().take() {
        return Err(e);
    }
    let mut root = match found {
        Ok(r) => r,
        Err(SearchError::NoBracketing) => return Err(ZetaError::NoSignChange { lo, hi, f_lo, f_hi }),
        Err(_) => {
            return Err(ZetaError::Convergence {
                tail_bound: tracker.last.1 - tracker.last.0,
                tolerance: tol,
            })
        }
    };
    let value_at = |s: f64| seen.borrow().iter().find(|(x, _)| *x == s).map(|&(_, v)| v);
    let (a, b) = tracker.last;
    // on convergence the solver hands back its previous iterate; use the
    // better end of the final bracket instead
    if let (Some(fa), Some(fb)) = (value_at(a), value_at(b)) {
        if !(a..=b).contains(&root) || value_at(root).is_none() {
            root = if fa.abs() <= fb.abs() { a } else { b };
        }
    }
    let residual = match value_at(root) {
        Some(v) => v.abs(),
        None => eval(root).abs(),
    };
    if let Some(e) = error.borrow_mut().take() {
        return Err(e);
    }
    if !(residual <= tol) {
        return Err(ZetaError::Convergence {
            tail_bound: residual,
            tolerance: tol,
        });
    }
    Ok(ZeroReport {
        s_root: root,
        residual,
        bracket: (a.min(root), b.max(root)),
        iterations: tracker.iterations,
    })
}

/// Real zero of `s -> Re zeta_N(s, x | w)` in `[lo, hi]`. Brackets that touch
/// a pole `s = 1..N` are rejected.
pub fn find_barnes_zero(
    n: usize,
    x: &BigRational,
    w: &PeriodVector,
    lo: f64,
    hi: f64,
    ctx: &EvalContext,
) -> Result<ZeroReport> {
    if let Some(p) = (1..=n).find(|&p| lo <= p as f64 && p as f64 <= hi) {
        return Err(ZetaError::Domain(format!("bracket [{lo}, {hi}] contains the pole s = {p}")));
    }
    let d = decompose(n, x, w)?;
    find_zero(|s| Ok(d.eval(Complex64::new(s, 0.0), ctx)?.re), lo, hi, ctx.target_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots() {
        let r = find_zero(|s| Ok(s * s - 2.0), 0.0, 2.0, 1e-12).unwrap();
        assert!((r.s_root - 2f64.sqrt()).abs() < 1e-15);
        assert!(r.bracket.0 <= r.s_root && r.s_root <= r.bracket.1);
        let r = find_zero(|s| Ok(s.cos() - s), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.s_root - 0.7390851332151607).abs() < 1e-15, "{r:?}");
    }

    #[test]
    fn bad_brackets() {
        assert!(matches!(
            find_zero(|s| Ok(s * s + 1.0), -1.0, 1.0, 1e-12),
            Err(ZetaError::NoSignChange { .. })
        ));
        assert!(find_zero(|s| Ok(s), 1.0, 0.0, 1e-12).is_err());
        assert!(find_zero(|_| Err(ZetaError::Domain("x".into())), 0.0, 1.0, 1e-12).is_err());
    }
}
