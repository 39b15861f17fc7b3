//! Multiple gamma functions `log Gamma_N(x) = zeta_N'(0, x)` and
//! `log Gamma_N(x | w) = zeta_N'(0, x | w)`, the symmetric sums linking
//! `zeta'(-(N-1), x)` to them, and their Fourier (Kummer-type) expansions.

mod kummer;

pub use kummer::{kummer_check, kummer_rhs, KummerCheck, KummerSeries, DEFAULT_MAX_TAIL};

use crate::context::EvalContext;
use crate::error::{Result, ZetaError};
use crate::exact::{hurwitz_value_nonpos, to_f64, BigRational, PeriodVector};
use crate::hurwitz::hurwitz_zeta_deriv_real;
use crate::reduction::{c_base, complete_homogeneous, decompose};
use crate::sum::NeumaierSum;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `log Gamma_N(x) = 1/(N-1)! sum_k C^{(k)}_{N,x}(0)/k! zeta'(-k, x)` for real `x > 0`.
pub fn log_gamma_n(n: usize, x: f64, ctx: &EvalContext) -> Result<f64> {
    if n == 0 {
        return Err(ZetaError::Domain("N must be at least 1".into()));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(ZetaError::Domain(format!("x must be positive, got {x}")));
    }
    // coefficient of t^k in C_N(t - x)
    let c = c_base(n).compose_linear(&BigRational::from_integer(1.into()), &BigRational::from_float(-x).expect("finite"));
    let mut acc = NeumaierSum::new();
    for k in 0..n {
        let coeff = to_f64(&c.coeff(k));
        if coeff != 0.0 {
            acc.add(coeff * hurwitz_zeta_deriv_real(1, -(k as f64), x, ctx)?);
        }
    }
    Ok(acc.value() / factorial(n - 1))
}

/// `log Gamma_N(x | w)` through the Hurwitz decomposition:
/// `sum coeff * (zeta'(-k, y) - log(w) zeta(-k, y))`, with `zeta(-k, y)` exact.
pub fn log_gamma_n_periods(n: usize, x: &BigRational, w_vec: &PeriodVector, ctx: &EvalContext) -> Result<f64> {
    let d = decompose(n, x, w_vec)?;
    let log_w = to_f64(&d.w).ln();
    let mut acc = NeumaierSum::new();
    for t in &d.terms {
        let y = to_f64(&t.y);
        let value = to_f64(&hurwitz_value_nonpos(t.k, &t.y));
        let deriv = hurwitz_zeta_deriv_real(1, -(t.k as f64), y, ctx)?;
        acc.add(to_f64(&t.coeff) * (deriv - log_w * value));
    }
    Ok(acc.value())
}

/// `sum_{1 <= a_1 <= ... <= a_l <= N-l} (a_1 - x)...(a_l - x)`, equal to 1 for `l = 0`.
pub fn symmetric_sum(n: usize, ell: usize, x: f64) -> Result<f64> {
    if n == 0 || ell >= n {
        return Err(ZetaError::Domain(format!("need 0 <= l <= N-1, got l = {ell}, N = {n}")));
    }
    let values: Vec<f64> = (1..=n - ell).map(|a| a as f64 - x).collect();
    Ok(complete_homogeneous(&values, ell))
}

/// Weights `(-1)^l (N-l-1)! symmetric_sum(N, l, x)` of `log Gamma_{N-l}(x)`,
/// `l = 0..N-1`, in the alternating sum equal to `zeta'(-(N-1), x)`.
pub fn gamma_sum_weights(n: usize, x: f64) -> Result<Vec<f64>> {
    (0..n)
        .map(|ell| {
            let sign = if ell % 2 == 0 { 1.0 } else { -1.0 };
            Ok(sign * factorial(n - ell - 1) * symmetric_sum(n, ell, x)?)
        })
        .collect()
}

/// `sum_l (-1)^l log Gamma_{N-l}(x) (N-l-1)! symmetric_sum(N, l, x)`.
pub fn kummer_lhs(n: usize, x: f64, ctx: &EvalContext) -> Result<f64> {
    let weights = gamma_sum_weights(n, x)?;
    let mut acc = NeumaierSum::new();
    for (ell, wt) in weights.iter().enumerate() {
        acc.add(wt * log_gamma_n(n - ell, x, ctx)?);
    }
    Ok(acc.value())
}

/// `zeta'(-(N-1), x)` assembled from `log Gamma_1(x), ..., log Gamma_N(x)`.
pub fn zeta_deriv_neg_via_gammas(n: usize, x: f64, ctx: &EvalContext) -> Result<f64> {
    kummer_lhs(n, x, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::special_values::barnes_deriv_nonpos;
    use std::f64::consts::PI;

    #[test]
    fn first_order_gamma() {
        let ctx = EvalContext::default();
        assert!((log_gamma_n(1, 0.5, &ctx).unwrap() + 0.5 * 2f64.ln()).abs() < 1e-14);
        assert!((log_gamma_n(1, 1.0, &ctx).unwrap() + 0.5 * (2.0 * PI).ln()).abs() < 1e-14);
        let zd = hurwitz_zeta_deriv_real(1, -1.0, 1.0, &ctx).unwrap();
        assert!((log_gamma_n(2, 1.0, &ctx).unwrap() - zd).abs() < 1e-14);
    }

    #[test]
    fn symmetric_sums() {
        assert_eq!(symmetric_sum(3, 0, 0.4).unwrap(), 1.0);
        assert!((symmetric_sum(2, 1, 0.3).unwrap() - 0.7).abs() < 1e-15);
        assert_eq!(symmetric_sum(4, 2, 0.0).unwrap(), 7.0);
        assert!(symmetric_sum(3, 3, 0.0).is_err());
    }

    #[test]
    fn low_order_weights() {
        for x in [0.1, 0.5, 0.75, 1.0] {
            let w = gamma_sum_weights(2, x).unwrap();
            assert!((w[0] - 1.0).abs() < 1e-15 && (w[1] + (1.0 - x)).abs() < 1e-15);
            let w = gamma_sum_weights(3, x).unwrap();
            assert!((w[0] / 2.0 - 1.0).abs() < 1e-15);
            assert!((w[1] / 2.0 + (1.5 - x)).abs() < 1e-15);
            assert!((w[2] / 2.0 - (x - 1.0).powi(2) / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn corollary_route() {
        let ctx = EvalContext::default();
        for n in 1..=4 {
            for x in [0.25, 0.5, 0.75, 1.0] {
                let a = zeta_deriv_neg_via_gammas(n, x, &ctx).unwrap();
                let b = hurwitz_zeta_deriv_real(1, 1.0 - n as f64, x, &ctx).unwrap();
                assert!((a - b).abs() < 1e-9, "N={n} x={x}: {a} {b}");
            }
        }
    }

    #[test]
    fn periods_route() {
        let ctx = EvalContext::default();
        for n in 1..=3 {
            let a = log_gamma_n_periods(n, &rat(2, 3), &PeriodVector::ones(n), &ctx).unwrap();
            let b = log_gamma_n(n, 2.0 / 3.0, &ctx).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
        let w = PeriodVector::from_pairs(&[(1, 1), (1, 2)]).unwrap();
        let x = rat(1, 3);
        let a = log_gamma_n_periods(2, &x, &w, &ctx).unwrap();
        let b = barnes_deriv_nonpos(1, 0, 2, &x, &w, &ctx).unwrap();
        assert!((a - b).abs() < 1e-9, "{a} {b}");
        let w = PeriodVector::from_pairs(&[(1, 2)]).unwrap();
        let a = log_gamma_n_periods(1, &rat(1, 2), &w, &ctx).unwrap();
        let expected = -0.5 * (2.0 * PI).ln() - 0.5 * 2f64.ln();
        assert!((a - expected).abs() < 1e-13);
    }
}
