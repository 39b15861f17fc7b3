//! Hurwitz zeta function and its s-derivatives by Euler–Maclaurin summation.
//!
//! ```text
//! zeta(s, x) = sum_{k<M} (k+x)^{-s} + a^{1-s}/(s-1) + a^{-s}/2
//!            + sum_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} a^{-s-2j+1},   a = M + x
//! ```
//!
//! Every term is elementary in `s`, so derivatives are taken exactly by
//! expanding each term as a jet in `s + eps` (see [`crate::series`]).

use crate::context::EvalContext;
use crate::error::{check_cap, Result, ZetaError};
use crate::exact::{bernoulli_number, to_f64, BigRational};
use crate::series::Jet;
use crate::sum::ComplexSum;
use num_complex::Complex64;
use num_traits::One;
use std::sync::OnceLock;

pub type ComplexValue = Complex64;

/// Radius of the excluded disc around the pole at `s = 1`.
pub const POLE_GUARD: f64 = 1e-12;

/// Highest supported derivative order.
pub const MAX_DERIV: usize = 10;

/// `B_{2j} / (2j)!` for `j = 0..=60`.
pub(crate) fn bernoulli_ratio(j: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut fact = BigRational::one();
        let mut out = Vec::with_capacity(61);
        for j in 0..=60usize {
            if j > 0 {
                let a = (2 * j - 1) as i64;
                let b = (2 * j) as i64;
                fact = fact * BigRational::from_integer((a * b).into());
            }
            out.push(to_f64(&(bernoulli_number(2 * j) / &fact)));
        }
        out
    })[j]
}

/// Value and estimated truncation error of an Euler–Maclaurin evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct EmEvaluation {
    /// `d^k/ds^k zeta(s, x)` for `k = 0..=n`.
    pub derivatives: Vec<ComplexValue>,
    /// Magnitude of the last Bernoulli correction term used.
    pub error_estimate: f64,
}

fn check_args(s: ComplexValue, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(ZetaError::Domain(format!("Hurwitz parameter must be positive, got {x}")));
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(ZetaError::Domain(format!("non-finite s = {s}")));
    }
    if (s - 1.0).norm() < POLE_GUARD {
        return Err(ZetaError::Pole {
            re: s.re,
            im: s.im,
            pole: 1,
            radius: POLE_GUARD,
        });
    }
    Ok(())
}

/// Chooses the direct-sum length `M`.
///
/// For `Re s >= 1` this is `max(em_terms, ceil(2 |Im s|))`. For `Re s < 1` the
/// direct sum and the integral term grow like `a^{1 - Re s}` and cancel, so
/// `M` is lowered to minimize rounding error plus Euler–Maclaurin remainder.
fn direct_terms(s: ComplexValue, x: f64, n: usize, j_max: usize, em_terms: usize) -> usize {
    let floor = (2.0 * s.im.abs()).ceil() as usize;
    let upper = em_terms.max(floor);
    if s.re >= 1.0 {
        return upper;
    }
    // |(s)_{2J+1}| with factors clamped below by 1 so that integer s, where the
    // Pochhammer symbol vanishes but its derivatives do not, is still covered.
    let poch: f64 = (0..=2 * j_max)
        .map(|i| (s + i as f64).norm().max(1.0))
        .product();
    let remainder_coeff = 2.0 * poch / (2.0 * std::f64::consts::PI).powi(2 * j_max as i32 + 2);
    let pole_factor = 1.0 + 1.0 / (s - 1.0).norm();
    let estimate = |m: usize| {
        let a = m as f64 + x;
        let log_factor = (1.0 + a.ln().abs()).powi(n as i32);
        let rounding = f64::EPSILON * a.powf(1.0 - s.re) * pole_factor;
        let truncation = remainder_coeff * a.powf(-s.re - 2.0 * j_max as f64 - 1.0);
        (rounding + truncation) * log_factor
    };
    (floor..=upper)
        .min_by(|&p, &q| estimate(p).total_cmp(&estimate(q)))
        .unwrap_or(upper)
}

/// All derivatives `zeta^{(k)}(s, x)`, `k = 0..=n`, with an error estimate.
pub fn hurwitz_zeta_em(n: usize, s: ComplexValue, x: f64, ctx: &EvalContext) -> Result<EmEvaluation> {
    check_cap("derivative order", n, MAX_DERIV)?;
    check_args(s, x)?;
    let j_max = ctx.em_order;
    let m = direct_terms(s, x, n, j_max, ctx.em_terms);

    let mut direct: Vec<ComplexSum> = vec![ComplexSum::new(); n + 1];
    for k in 0..m {
        let a = k as f64 + x;
        let la = a.ln();
        let mut term = (-s * la).exp();
        for acc in direct.iter_mut() {
            acc.add(term);
            term *= -la;
        }
    }

    let a = m as f64 + x;
    let la = a.ln();
    let a_pow = (-s * la).exp();
    let one = Complex64::new(1.0, 0.0);
    // a^{-(s+eps)}
    let power = Jet::exp_linear(a_pow, Complex64::new(-la, 0.0), n);

    let integral = power
        .scale(Complex64::new(a, 0.0))
        .mul_jet(&Jet::reciprocal_linear(s - one, n));
    let half = power.scale(Complex64::new(0.5, 0.0));

    // sum_j B_{2j}/(2j)! (s+eps)_{2j-1} a^{1-2j}, multiplied by a^{-(s+eps)} afterwards.
    let mut poch = Jet::variable(s, n);
    let mut corrections = Jet::zero(n);
    let inv_a2 = 1.0 / (a * a);
    let mut a_scale = 1.0 / a;
    let mut last = 0.0;
    for j in 1..=j_max {
        if j > 1 {
            let base = (2 * j - 3) as f64;
            poch = poch.mul_linear(s + base).mul_linear(s + base + 1.0);
            a_scale *= inv_a2;
        }
        let c = bernoulli_ratio(j) * a_scale;
        corrections.add_assign_scaled(&poch, Complex64::new(c, 0.0));
        last = (poch.value() * c).norm();
    }
    let corrections = corrections.mul_jet(&power);

    let tail = &(&integral + &half) + &corrections;
    let tail_derivs = tail.derivatives();
    let derivatives: Vec<ComplexValue> = direct
        .iter()
        .zip(tail_derivs)
        .map(|(d, t)| d.value() + t)
        .collect();
    if derivatives.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(ZetaError::Overflow(format!("zeta^({n})({s}, {x})")));
    }
    Ok(EmEvaluation {
        derivatives,
        error_estimate: last * a_pow.norm(),
    })
}

/// Analytically continued Hurwitz zeta function `zeta(s, x)`.
pub fn hurwitz_zeta(s: ComplexValue, x: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    Ok(hurwitz_zeta_em(0, s, x, ctx)?.derivatives[0])
}

/// `d^n/ds^n zeta(s, x)`.
pub fn hurwitz_zeta_deriv(n: usize, s: ComplexValue, x: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    Ok(hurwitz_zeta_em(n, s, x, ctx)?.derivatives[n])
}

/// Real-argument convenience wrapper returning `zeta^{(n)}(s, x)` for real `s`.
pub fn hurwitz_zeta_deriv_real(n: usize, s: f64, x: f64, ctx: &EvalContext) -> Result<f64> {
    Ok(hurwitz_zeta_deriv(n, Complex64::new(s, 0.0), x, ctx)?.re)
}
