//! Multiple Hurwitz zeta functions (all periods 1) and the recurrences
//! linking `zeta_N` to `zeta_{N-1}`.
//!
//! The shift recurrence is implemented as
//!
//! ```text
//! zeta_{N-k}(s-k, x) = sum_{l=0}^{k} (-1)^l zeta_{N-l}(s, x)
//!     prod_{i=1}^{k-l} (N-k+i-1) * h_l(a - x : N-k <= a <= N-l)
//! ```
//!
//! where `h_l` is the complete homogeneous symmetric polynomial. This index
//! range reproduces the one-step recurrence at `k = 1` and is confirmed
//! numerically for larger `k`; starting the product at `i = 0` does not.

use super::decompose::{c_taylor, check_poles};
use crate::context::EvalContext;
use crate::error::{Result, ZetaError};
use crate::hurwitz::{hurwitz_zeta, ComplexValue};
use crate::sum::ComplexSum;

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `zeta_N(s, x) = 1/(N-1)! sum_k C^{(k)}_{N,x}(0)/k! zeta(s-k, x)` for real `x > 0`.
pub fn multiple_hurwitz_zeta(n: usize, s: ComplexValue, x: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    if n == 0 {
        return Err(ZetaError::Domain("N must be at least 1".into()));
    }
    check_poles(n, s)?;
    let norm = factorial_f64(n - 1).recip();
    let mut acc = ComplexSum::new();
    for (k, d) in c_taylor(n).iter().enumerate() {
        let c = d.eval_f64(-x) * norm;
        if c != 0.0 {
            acc.add(hurwitz_zeta(s - k as f64, x, ctx)? * c);
        }
    }
    Ok(acc.value())
}

/// Complete homogeneous symmetric polynomial `h_l(values)`, i.e. the sum of
/// `v_{a_1} ... v_{a_l}` over weakly increasing index sequences.
pub fn complete_homogeneous(values: &[f64], ell: usize) -> f64 {
    let mut h = vec![0.0; ell + 1];
    h[0] = 1.0;
    for &v in values {
        for j in 1..=ell {
            h[j] += v * h[j - 1];
        }
    }
    h[ell]
}

/// Both sides of `(N-1) zeta_N(s,x) = zeta_{N-1}(s-1,x) + (N-1-x) zeta_{N-1}(s,x)`.
pub fn recurrence_check_n(n: usize, s: ComplexValue, x: f64, ctx: &EvalContext) -> Result<(ComplexValue, ComplexValue)> {
    if n < 2 {
        return Err(ZetaError::Domain("recurrence needs N >= 2".into()));
    }
    let m = (n - 1) as f64;
    let lhs = multiple_hurwitz_zeta(n, s, x, ctx)? * m;
    let rhs = multiple_hurwitz_zeta(n - 1, s - 1.0, x, ctx)?
        + multiple_hurwitz_zeta(n - 1, s, x, ctx)? * (m - x);
    Ok((lhs, rhs))
}

/// Both sides of the `k`-step shift recurrence (see the module docs), `1 <= k < N`.
pub fn recurrence_check_k(n: usize, k: usize, s: ComplexValue, x: f64, ctx: &EvalContext) -> Result<(ComplexValue, ComplexValue)> {
    if k == 0 || k >= n {
        return Err(ZetaError::Domain(format!("need 1 <= k < N, got k = {k}, N = {n}")));
    }
    let lhs = multiple_hurwitz_zeta(n - k, s - k as f64, x, ctx)?;
    let mut rhs = ComplexSum::new();
    for ell in 0..=k {
        let prod: f64 = (1..=k - ell).map(|i| (n - k + i - 1) as f64).product();
        let values: Vec<f64> = (n - k..=n - ell).map(|a| a as f64 - x).collect();
        let sign = if ell % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * prod * complete_homogeneous(&values, ell);
        rhs.add(multiple_hurwitz_zeta(n - ell, s, x, ctx)? * c);
    }
    Ok((lhs, rhs.value()))
}
