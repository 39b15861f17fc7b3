//! Fourier expansions of `sum_l (-1)^l (N-l-1)! h_l log Gamma_{N-l}(x)` on `(0, 1]`.
//!
//! For even `N` the right side is
//!
//! ```text
//! 2 (-1)^{N/2} (N-1)! / (2 pi)^N { sum log(n) cos(2 pi n x)/n^N
//!     + (log 2 pi + gamma - H_{N-1}) sum cos(2 pi n x)/n^N - pi/2 sum sin(2 pi n x)/n^N }
//! ```
//!
//! and for odd `N` the sign is `(-1)^{(N-1)/2}`, sine and cosine swap, and the
//! last term is `+ pi/2 sum cos(2 pi n x)/n^N`. `N = 1` is the classical Kummer
//! series for `log(Gamma(x)/sqrt(2 pi))`.

use super::kummer_lhs;
use crate::context::EvalContext;
use crate::error::{Result, ZetaError};
use crate::exact::{to_f64, BigRational};
use crate::hurwitz::euler_gamma;
use crate::sum::NeumaierSum;
use std::f64::consts::PI;

/// Default ceiling on the reported truncation bound.
pub const DEFAULT_MAX_TAIL: f64 = 1e-4;

/// Truncated right side with a bound on the neglected tail.
#[derive(Clone, Debug, PartialEq)]
pub struct KummerSeries {
    pub n: usize,
    pub x: f64,
    pub terms: usize,
    pub value: f64,
    pub tail_bound: f64,
}

fn harmonic(n: usize) -> f64 {
    let h: BigRational = (1..=n as i64)
        .map(|k| BigRational::new(1.into(), k.into()))
        .sum();
    to_f64(&h)
}

/// Bound on the tail past `m` terms.
///
/// For `N >= 2` the terms are bounded in absolute value and compared with
/// `int_m^inf log(t)/t^N dt = log m/((N-1) m^{N-1}) + 1/((N-1)^2 m^{N-1})`.
/// For `N = 1` the series only converges conditionally; summation by parts
/// bounds `|sum_{n>m} a_n e^{2 pi i n x}|` by `a_{m+1} / |sin(pi x)|` for
/// decreasing `a_n`.
fn tail_bound(n: usize, x: f64, m: usize, constant: f64, prefactor: f64) -> f64 {
    let mf = m.max(3) as f64;
    if n == 1 {
        let s = (PI * x).sin().abs();
        if s == 0.0 {
            return f64::INFINITY;
        }
        let a = (mf + 1.0).recip();
        let a_log = (mf + 1.0).ln() * a;
        return prefactor * (a_log + (constant.abs() + PI / 2.0) * a) / s;
    }
    let k = (n - 1) as f64;
    let p = mf.powf(k);
    let log_part = mf.ln() / (k * p) + 1.0 / (k * k * p);
    let plain = 1.0 / (k * p);
    prefactor * (log_part + (constant.abs() + PI / 2.0) * plain)
}

/// Right side truncated after `terms` terms. Fails with a convergence error
/// when the tail bound exceeds `max_tail`.
pub fn kummer_rhs(n: usize, x: f64, terms: usize, max_tail: f64, ctx: &EvalContext) -> Result<KummerSeries> {
    if n == 0 {
        return Err(ZetaError::Domain("N must be at least 1".into()));
    }
    if !(x > 0.0 && x <= 1.0) {
        return Err(ZetaError::Domain(format!("x must lie in (0, 1], got {x}")));
    }
    if n == 1 && x == 1.0 {
        return Err(ZetaError::Domain("the N = 1 series diverges at x = 1".into()));
    }
    if terms == 0 {
        return Err(ZetaError::Domain("need at least one term".into()));
    }
    let nn = n as i32;
    let mut log_sum = NeumaierSum::new();
    let mut even_sum = NeumaierSum::new();
    let mut odd_sum = NeumaierSum::new();
    for k in 1..=terms {
        let kf = k as f64;
        let (sin, cos) = (2.0 * PI * (kf * x).fract()).sin_cos();
        let a = kf.powi(-nn);
        // for odd N the roles of sine and cosine are exchanged
        let (main, other) = if n % 2 == 0 { (cos, sin) } else { (sin, cos) };
        log_sum.add(kf.ln() * main * a);
        even_sum.add(main * a);
        odd_sum.add(other * a);
    }
    let constant = (2.0 * PI).ln() + euler_gamma(ctx) - harmonic(n - 1);
    let half = n / 2;
    let sign = if half % 2 == 0 { 1.0 } else { -1.0 };
    let fact: f64 = (1..n).map(|i| i as f64).product();
    let prefactor = 2.0 * sign * fact / (2.0 * PI).powi(nn);
    let last = if n % 2 == 0 { -PI / 2.0 } else { PI / 2.0 };
    let mut inner = NeumaierSum::new();
    inner.add(log_sum.value());
    inner.add(constant * even_sum.value());
    inner.add(last * odd_sum.value());
    let bound = tail_bound(n, x, terms, constant, prefactor.abs());
    if bound > max_tail {
        return Err(ZetaError::Convergence {
            tail_bound: bound,
            tolerance: max_tail,
        });
    }
    Ok(KummerSeries {
        n,
        x,
        terms,
        value: prefactor * inner.value(),
        tail_bound: bound,
    })
}

/// Both sides of the expansion and their difference.
#[derive(Clone, Debug, PartialEq)]
pub struct KummerCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub tail_bound: f64,
    pub diff: f64,
}

impl KummerCheck {
    pub fn passes(&self, tol: f64) -> bool {
        self.diff <= self.tail_bound + tol
    }
}

pub fn kummer_check(n: usize, x: f64, terms: usize, max_tail: f64, ctx: &EvalContext) -> Result<KummerCheck> {
    let rhs = kummer_rhs(n, x, terms, max_tail, ctx)?;
    let lhs = kummer_lhs(n, x, ctx)?;
    Ok(KummerCheck {
        lhs,
        rhs: rhs.value,
        tail_bound: rhs.tail_bound,
        diff: (lhs - rhs.value).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_and_third_order() {
        let ctx = EvalContext::default();
        for x in [1.0 / 6.0, 0.5, 1.0] {
            let c = kummer_check(2, x, 100_000, 1e-3, &ctx).unwrap();
            assert!(c.passes(1e-8), "N=2 x={x}: {c:?}");
            let c = kummer_check(3, x, 10_000, 1e-6, &ctx).unwrap();
            assert!(c.passes(1e-8), "N=3 x={x}: {c:?}");
        }
    }

    #[test]
    fn classical_kummer_series() {
        let ctx = EvalContext::default();
        let c = kummer_check(1, 0.3, 200_000, 1.0, &ctx).unwrap();
        assert!(c.passes(1e-8), "{c:?}");
        assert!(c.diff < 1e-3);
    }

    #[test]
    fn under_truncation_is_reported() {
        let ctx = EvalContext::default();
        assert!(matches!(
            kummer_rhs(2, 1.0, 100, DEFAULT_MAX_TAIL, &ctx),
            Err(ZetaError::Convergence { .. })
        ));
        assert!(kummer_rhs(1, 1.0, 100, 1.0, &ctx).is_err());
    }
}
