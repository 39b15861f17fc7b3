//! `H^{(c)}(m, u/v)` at positive integers `m`, where
//!
//! ```text
//! H(s, u/v) = sum_{k=1}^{v} cos(pi s/2 - 2 pi k u/v) zeta(s, k/v)
//! ```
//!
//! For `m >= 2` the `c`-th derivative is
//! `-sum_k sum_i C(c,i) (pi/2)^{c-i} sin(pi(m+c-i-1)/2 - 2 pi k u/v) zeta^{(i)}(m, k/v)`;
//! at `m = 1` the pole of `zeta` cancels and the Stieltjes constants take over:
//! `eps_c + sum_k sum_i (-1)^{i+1} C(c,i) (pi/2)^{c-i} sin(pi(c-i)/2 - 2 pi k u/v) gamma_i(k/v)`,
//! with `eps_c = (-1)^{c/2+1} (pi/2)^{c+1} v / (c+1)` for even `c` and `u = v`, else 0.
//!
//! Writing `sin(phi - theta) = sin(phi) cos(theta) - cos(phi) sin(theta)`, the
//! sums over `k` are the discrete Fourier transform of `k -> zeta^{(i)}(m, k/v)`,
//! so one FFT per `i` yields every `u` at once.

use crate::context::EvalContext;
use crate::error::{check_cap, Result, ZetaError};
use crate::hurwitz::{hurwitz_zeta_em, stieltjes_all_f64, MAX_DERIV};
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Arc;

/// `(sin, cos)` of `q pi / 2`, exact.
fn quarter_turn(q: i64) -> (f64, f64) {
    match q.rem_euclid(4) {
        0 => (0.0, 1.0),
        1 => (1.0, 0.0),
        2 => (0.0, -1.0),
        _ => (-1.0, 0.0),
    }
}

fn binom_f64(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `eps_{c, u/v}`.
pub fn epsilon_term(c: usize, u: u64, v: u64) -> f64 {
    if c % 2 == 1 || u != v {
        return 0.0;
    }
    let sign = if (c / 2) % 2 == 0 { -1.0 } else { 1.0 };
    sign / (c as f64 + 1.0) * FRAC_PI_2.powi(c as i32 + 1) * v as f64
}

/// Weight and phase of the `i`-th inner term: the summand is
/// `weight * sin(phase * pi/2 - 2 pi k u/v) * z_i(k)`.
fn inner_term(c: usize, i: usize, m: usize) -> (f64, i64) {
    let base = binom_f64(c, i) * FRAC_PI_2.powi((c - i) as i32);
    if m >= 2 {
        (-base, (m + c - i - 1) as i64)
    } else {
        let sign = if i % 2 == 0 { -1.0 } else { 1.0 };
        (sign * base, (c - i) as i64)
    }
}

/// `z_i(k)` for `k = 1..v` and `i = 0..=order`: `zeta^{(i)}(m, k/v)` or, at
/// `m = 1`, `gamma_i(k/v)`. Result indexed `[i][k - 1]`.
fn inner_values(order: usize, m: usize, v: u64, ctx: &EvalContext) -> Result<Vec<Vec<f64>>> {
    let mut out = vec![Vec::with_capacity(v as usize); order + 1];
    for k in 1..=v {
        let x = k as f64 / v as f64;
        let values = if m == 1 {
            stieltjes_all_f64(order, x, ctx.stieltjes_terms, ctx.stieltjes_order)
        } else {
            hurwitz_zeta_em(order, Complex64::new(m as f64, 0.0), x, ctx)?
                .derivatives
                .into_iter()
                .map(|z| z.re)
                .collect()
        };
        for (i, z) in values.into_iter().enumerate() {
            out[i].push(z);
        }
    }
    Ok(out)
}

fn check_args(c: usize, m: usize, u: u64, v: u64) -> Result<()> {
    check_cap("derivative order c", c, MAX_DERIV)?;
    if m == 0 {
        return Err(ZetaError::Domain("H is evaluated at positive integers m".into()));
    }
    if u == 0 || u > v {
        return Err(ZetaError::Domain(format!("need 1 <= u <= v, got u = {u}, v = {v}")));
    }
    Ok(())
}

/// `H^{(c)}(m, u/v)` by the literal double sum, `O(v c)` work.
pub fn h_deriv_direct(c: usize, m: usize, u: u64, v: u64, ctx: &EvalContext) -> Result<f64> {
    check_args(c, m, u, v)?;
    let z = inner_values(c, m, v, ctx)?;
    let mut acc = crate::sum::NeumaierSum::new();
    acc.add(if m == 1 { epsilon_term(c, u, v) } else { 0.0 });
    for i in 0..=c {
        let (weight, phase) = inner_term(c, i, m);
        let phi = phase as f64 * FRAC_PI_2;
        for k in 1..=v {
            // reduce k u mod v first so the angle stays small
            let theta = 2.0 * PI * ((k * u) % v) as f64 / v as f64;
            acc.add(weight * (phi - theta).sin() * z[i][(k - 1) as usize]);
        }
    }
    Ok(acc.value())
}

/// Table of `H^{(c)}(m, u/v)` for `c = 0..=order` and `u = 1..=v`, laid out
/// as `table[c * v + (u - 1)]`.
pub fn h_table(order: usize, m: usize, v: u64, ctx: &EvalContext) -> Result<Arc<Vec<f64>>> {
    check_args(order, m, 1, v)?;
    let key = (m, v as usize, order);
    if let Some(t) = ctx.h_tables.get(&key) {
        return Ok(t);
    }
    let z = inner_values(order, m, v, ctx)?;
    let n = v as usize;
    let fft = FftPlanner::<f64>::new().plan_fft_forward(n);
    // spectra[i][u mod v] = sum_k z_i(k) e^{-2 pi i k u / v}
    let spectra: Vec<Vec<Complex64>> = z
        .iter()
        .map(|zi| {
            let mut buf = vec![Complex64::new(0.0, 0.0); n];
            for (k, &val) in zi.iter().enumerate() {
                buf[(k + 1) % n] = Complex64::new(val, 0.0);
            }
            fft.process(&mut buf);
            buf
        })
        .collect();
    let mut table = vec![0.0; (order + 1) * n];
    for c in 0..=order {
        for u in 1..=v {
            let idx = (u as usize) % n;
            let mut acc = crate::sum::NeumaierSum::new();
            if m == 1 {
                acc.add(epsilon_term(c, u, v));
            }
            for (i, spec) in spectra.iter().enumerate().take(c + 1) {
                let (weight, phase) = inner_term(c, i, m);
                let (sin_phi, cos_phi) = quarter_turn(phase);
                // sum_k z cos(theta) = Re, sum_k z sin(theta) = -Im
                let (cos_sum, sin_sum) = (spec[idx].re, -spec[idx].im);
                acc.add(weight * (sin_phi * cos_sum - cos_phi * sin_sum));
            }
            table[c * n + (u as usize - 1)] = acc.value();
        }
    }
    Ok(ctx.h_tables.insert(key, Arc::new(table)))
}

/// `H^{(c)}(m, u/v)`, served from the cached table for `(m, v)`.
pub fn h_deriv(c: usize, m: usize, u: u64, v: u64, ctx: &EvalContext) -> Result<f64> {
    check_args(c, m, u, v)?;
    let table = h_table(c, m, v, ctx)?;
    Ok(table[c * v as usize + (u as usize - 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functional_equation_anchors() {
        let ctx = EvalContext::default();
        // zeta(0) = 2 Gamma(1) (2 pi)^{-1} H(1, 1) = -1/2
        assert!((h_deriv(0, 1, 1, 1, &ctx).unwrap() + FRAC_PI_2).abs() < 1e-14);
        // zeta(-1) = 2 Gamma(2) (2 pi)^{-2} H(2, 1) = -1/12
        let h = h_deriv(0, 2, 1, 1, &ctx).unwrap();
        assert!((h + PI * PI / 6.0).abs() < 1e-13);
        assert!(h_deriv(0, 1, 1, 2, &ctx).unwrap().abs() < 1e-14);
    }

    #[test]
    fn fft_table_matches_direct_sum() {
        let ctx = EvalContext::default();
        for (m, v) in [(1, 7), (2, 6), (3, 12), (1, 1), (4, 5)] {
            for c in 0..=4 {
                for u in 1..=v {
                    let a = h_deriv(c, m, u, v, &ctx).unwrap();
                    let b = h_deriv_direct(c, m, u, v, &ctx).unwrap();
                    assert!((a - b).abs() < 1e-11 * b.abs().max(1.0), "c={c} m={m} u={u} v={v}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn depends_only_on_ratio_after_scaling() {
        // zeta(1-m, u/v) = 2 Gamma(m) (2 pi v)^{-m} H(m, u/v) is independent of
        // the representative of u/v
        let ctx = EvalContext::default();
        for m in 1..=3 {
            let a = h_deriv(0, m, 1, 1, &ctx).unwrap() / (2.0 * PI).powi(m as i32);
            let b = h_deriv(0, m, 2, 2, &ctx).unwrap() / (4.0 * PI).powi(m as i32);
            assert!((a - b).abs() < 1e-13, "m={m}: {a} {b}");
        }
    }

    #[test]
    fn pole_coefficient_vanishes() {
        for v in 1..=12u64 {
            for u in 1..=v {
                let s: f64 = (1..=v)
                    .map(|k| (2.0 * PI * ((k * u) % v) as f64 / v as f64).sin())
                    .sum();
                assert!(s.abs() < 1e-13, "u={u} v={v}: {s}");
            }
        }
    }

    #[test]
    fn epsilon_only_for_even_c_at_one() {
        assert_eq!(epsilon_term(0, 1, 1), -FRAC_PI_2);
        assert_eq!(epsilon_term(1, 3, 3), 0.0);
        assert_eq!(epsilon_term(2, 1, 3), 0.0);
        assert!((epsilon_term(2, 3, 3) - FRAC_PI_2.powi(3)).abs() < 1e-15);
    }

    #[test]
    fn m_one_branch_is_the_limit_of_the_series() {
        // H(s, u/v) is entire: its derivatives at s = 1 match central
        // differences of the defining cosine sum evaluated off s = 1.
        let ctx = EvalContext::default();
        let h_at = |s: f64, u: u64, v: u64| -> f64 {
            (1..=v)
                .map(|k| {
                    let theta = 2.0 * PI * ((k * u) % v) as f64 / v as f64;
                    let z = hurwitz_zeta_em(0, Complex64::new(s, 0.0), k as f64 / v as f64, &ctx)
                        .unwrap()
                        .derivatives[0]
                        .re;
                    (PI * s / 2.0 - theta).cos() * z
                })
                .sum()
        };
        let step = 1e-4;
        for (u, v) in [(1, 1), (2, 2), (1, 3), (3, 4), (5, 5)] {
            let (p, q) = (h_at(1.0 + step, u, v), h_at(1.0 - step, u, v));
            let mid = 0.5 * (p + q);
            let slope = (p - q) / (2.0 * step);
            assert!((mid - h_deriv(0, 1, u, v, &ctx).unwrap()).abs() < 1e-6, "{u}/{v}");
            assert!((slope - h_deriv(1, 1, u, v, &ctx).unwrap()).abs() < 1e-6, "{u}/{v}");
        }
    }
}
