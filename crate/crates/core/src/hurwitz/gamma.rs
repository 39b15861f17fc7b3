//! Polygamma values at positive integers and `Gamma^{(a)}(m)` through complete
//! Bell polynomials.

use super::euler_maclaurin::hurwitz_zeta_deriv_real;
use super::stieltjes::euler_gamma;
use crate::context::EvalContext;
use crate::error::{check_cap, Result, ZetaError};
use crate::sum::NeumaierSum;

pub const MAX_GAMMA_DERIV: usize = 10;

/// Riemann `zeta(k)` for an integer `k >= 2`.
pub fn riemann_zeta_int(k: usize, ctx: &EvalContext) -> Result<f64> {
    if k < 2 {
        return Err(ZetaError::Domain(format!("riemann_zeta_int needs k >= 2, got {k}")));
    }
    hurwitz_zeta_deriv_real(0, k as f64, 1.0, ctx)
}

fn factorial(n: usize) -> f64 {
    (2..=n).map(|i| i as f64).product()
}

/// `psi^{(ell)}(m)` for integers `ell >= 0`, `m >= 1`:
///
/// * `psi(m) = -gamma + sum_{k=1}^{m-1} 1/k`
/// * `psi^{(ell)}(m) = (-1)^{ell+1} ell! (zeta(ell+1) - sum_{k=1}^{m-1} k^{-ell-1})`
pub fn psi_deriv(ell: usize, m: usize, ctx: &EvalContext) -> Result<f64> {
    if m == 0 {
        return Err(ZetaError::Domain("psi_deriv needs m >= 1".into()));
    }
    if ell == 0 {
        let mut acc = NeumaierSum::new();
        acc.add(-euler_gamma(ctx));
        for k in 1..m {
            acc.add(1.0 / k as f64);
        }
        return Ok(acc.value());
    }
    let mut acc = NeumaierSum::new();
    acc.add(riemann_zeta_int(ell + 1, ctx)?);
    for k in 1..m {
        acc.add(-(k as f64).powi(-(ell as i32 + 1)));
    }
    let sign = if ell % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * factorial(ell) * acc.value())
}

/// Complete Bell polynomial `B_n(X_1, ..., X_n)` via
/// `B_{n+1} = sum_{k=0}^{n} C(n, k) B_{n-k} X_{k+1}`, `B_0 = 1`.
///
/// `args[i]` holds `X_{i+1}`.
pub fn bell_complete(args: &[f64], n: usize) -> f64 {
    bell_complete_all(args, n)[n]
}

/// `B_0, ..., B_n` at the same arguments.
pub fn bell_complete_all(args: &[f64], n: usize) -> Vec<f64> {
    assert!(args.len() >= n, "bell_complete needs at least n arguments");
    let mut bell = Vec::with_capacity(n + 1);
    bell.push(1.0);
    for m in 0..n {
        // binomial(m, k) built incrementally
        let mut binom = 1.0;
        let mut acc = 0.0;
        for k in 0..=m {
            acc += binom * bell[m - k] * args[k];
            binom = binom * (m - k) as f64 / (k + 1) as f64;
        }
        bell.push(acc);
    }
    bell
}

/// `Gamma^{(a)}(m) = (m-1)! B_a(psi(m), psi'(m), ..., psi^{(a-1)}(m))`.
pub fn gamma_deriv(a: usize, m: usize, ctx: &EvalContext) -> Result<f64> {
    Ok(gamma_derivs(a, m, ctx)?[a])
}

/// `Gamma^{(0)}(m), ..., Gamma^{(a_max)}(m)`.
pub fn gamma_derivs(a_max: usize, m: usize, ctx: &EvalContext) -> Result<Vec<f64>> {
    check_cap("Gamma derivative order", a_max, MAX_GAMMA_DERIV)?;
    if m == 0 {
        return Err(ZetaError::Domain("gamma_deriv needs m >= 1".into()));
    }
    let psis = (0..a_max)
        .map(|l| psi_deriv(l, m, ctx))
        .collect::<Result<Vec<_>>>()?;
    let scale = factorial(m - 1);
    Ok(bell_complete_all(&psis, a_max)
        .into_iter()
        .map(|b| scale * b)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Sum over partitions k_1 + 2 k_2 + ... + n k_n = n.
    fn bell_by_partitions(args: &[f64], n: usize) -> f64 {
        fn rec(args: &[f64], n: usize, part: usize, remaining: usize, acc: f64, fact_n: f64, out: &mut f64) {
            if remaining == 0 {
                *out += fact_n * acc;
                return;
            }
            if part > n {
                return;
            }
            let mut k = 0;
            let mut term = 1.0;
            let mut kfact = 1.0;
            let pf: f64 = (1..=part).map(|i| i as f64).product();
            while k * part <= remaining {
                rec(args, n, part + 1, remaining - k * part, acc * term / kfact, fact_n, out);
                k += 1;
                kfact *= k as f64;
                term *= args[part - 1] / pf;
            }
        }
        let mut out = 0.0;
        let fact_n: f64 = (1..=n).map(|i| i as f64).product();
        rec(args, n, 1, n, 1.0, fact_n, &mut out);
        out
    }

    #[test]
    fn bell_small_cases() {
        let (a, b, c) = (1.3, -0.7, 2.1);
        assert_eq!(bell_complete(&[], 0), 1.0);
        assert!((bell_complete(&[a, b], 2) - (a * a + b)).abs() < 1e-15);
        assert!((bell_complete(&[a, b, c], 3) - (a * a * a + 3.0 * a * b + c)).abs() < 1e-14);
    }

    #[test]
    fn bell_matches_partition_sum() {
        let args = [0.3, -1.1, 0.7, 2.0, -0.4, 1.5, 0.9, -2.2];
        for n in 0..=8 {
            let r = bell_complete(&args, n);
            let p = bell_by_partitions(&args, n);
            assert!((r - p).abs() < 1e-11 * (1.0 + p.abs()), "n={n}: {r} vs {p}");
        }
    }

    #[test]
    fn psi_values() {
        let ctx = EvalContext::default();
        let g = euler_gamma(&ctx);
        assert!((psi_deriv(0, 1, &ctx).unwrap() + g).abs() < 1e-15);
        assert!((psi_deriv(0, 3, &ctx).unwrap() - (-g + 1.5)).abs() < 1e-15);
        assert!((psi_deriv(1, 1, &ctx).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        // psi'(2) = zeta(2) - 1
        assert!((psi_deriv(1, 2, &ctx).unwrap() - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
        assert!(psi_deriv(0, 0, &ctx).is_err());
    }

    #[test]
    fn gamma_derivatives_at_small_integers() {
        let ctx = EvalContext::default();
        let g = euler_gamma(&ctx);
        let z2 = PI * PI / 6.0;
        let z3 = riemann_zeta_int(3, &ctx).unwrap();
        assert_eq!(gamma_deriv(0, 4, &ctx).unwrap(), 6.0);
        assert!((gamma_deriv(1, 1, &ctx).unwrap() + g).abs() < 1e-15);
        assert!((gamma_deriv(2, 1, &ctx).unwrap() - (g * g + z2)).abs() < 1e-14);
        let g3 = -g.powi(3) - 3.0 * g * z2 - 2.0 * z3;
        assert!((gamma_deriv(3, 1, &ctx).unwrap() - g3).abs() < 1e-13);
        assert!((gamma_deriv(1, 2, &ctx).unwrap() - (1.0 - g)).abs() < 1e-15);
        assert!(gamma_deriv(11, 1, &ctx).is_err());
    }
}
