//! Generalized Stieltjes constants `gamma_n(x)`.
//!
//! Starting from the limit
//!
//! ```text
//! gamma_n(x) = lim_{m->inf} ( sum_{k=0}^{m} log^n(k+x)/(k+x) - log^{n+1}(m+x)/(n+1) )
//! ```
//!
//! the part of the sum beyond `M` is replaced by its Euler–Maclaurin
//! expansion for `f(t) = log^n(t+x)/(t+x)`:
//!
//! ```text
//! gamma_n(x) = sum_{k<M} f(k) - log^{n+1}(a)/(n+1) + f(M)/2
//!              - sum_{j=1}^{J} B_{2j}/(2j)! f^{(2j-1)}(M),     a = M + x
//! ```

use super::euler_maclaurin::bernoulli_ratio;
use crate::context::EvalContext;
use crate::error::{check_cap, Result, ZetaError};
use crate::exact::{to_f64, BigRational};
use crate::series::Jet;
use crate::sum::NeumaierSum;
use num_traits::{One, Signed};

pub const MAX_STIELTJES: usize = 10;

/// A computed `gamma_n(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct StieltjesConstant {
    pub n: usize,
    pub x: BigRational,
    pub value: f64,
}

/// `gamma_0(x), ..., gamma_{n_max}(x)` for real `x > 0`, uncached.
pub fn stieltjes_all_f64(n_max: usize, x: f64, terms: usize, order: usize) -> Vec<f64> {
    let mut direct = vec![NeumaierSum::new(); n_max + 1];
    for k in 0..terms {
        let a = k as f64 + x;
        let l = a.ln();
        let mut t = 1.0 / a;
        for acc in direct.iter_mut() {
            acc.add(t);
            t *= l;
        }
    }

    let a = terms as f64 + x;
    let l = a.ln();
    let jet_order = 2 * order - 1;
    let log_jet = Jet::ln_linear(a, jet_order);
    let mut f_jet = Jet::reciprocal_linear(a, jet_order);

    let mut out = Vec::with_capacity(n_max + 1);
    for (n, acc) in direct.iter_mut().enumerate() {
        if n > 0 {
            f_jet = f_jet.mul_jet(&log_jet);
        }
        acc.add(-l.powi(n as i32 + 1) / (n as f64 + 1.0));
        acc.add(0.5 * f_jet.value());
        for j in 1..=order {
            acc.add(-bernoulli_ratio(j) * f_jet.derivative(2 * j - 1));
        }
        out.push(acc.value());
    }
    out
}

fn check_x(x: &BigRational) -> Result<()> {
    if !x.is_positive() || x > &BigRational::one() {
        return Err(ZetaError::Domain(format!(
            "Stieltjes parameter must lie in (0, 1], got {x}"
        )));
    }
    Ok(())
}

/// `gamma_n(x)` for rational `x` in `(0, 1]`, memoized in the context.
pub fn stieltjes(n: usize, x: &BigRational, ctx: &EvalContext) -> Result<f64> {
    check_cap("Stieltjes index", n, MAX_STIELTJES)?;
    check_x(x)?;
    if let Some(v) = ctx.stieltjes_cache.get(&(n, x.clone())) {
        return Ok(v);
    }
    let values = stieltjes_all(n, x, ctx)?;
    Ok(values[n])
}

/// `gamma_0(x), ..., gamma_{n_max}(x)`, filling the cache for every order.
pub fn stieltjes_all(n_max: usize, x: &BigRational, ctx: &EvalContext) -> Result<Vec<f64>> {
    check_cap("Stieltjes index", n_max, MAX_STIELTJES)?;
    check_x(x)?;
    let cached: Option<Vec<f64>> = (0..=n_max)
        .map(|n| ctx.stieltjes_cache.get(&(n, x.clone())))
        .collect();
    if let Some(v) = cached {
        return Ok(v);
    }
    let values = stieltjes_all_f64(n_max, to_f64(x), ctx.stieltjes_terms, ctx.stieltjes_order);
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(n, v)| ctx.stieltjes_cache.insert((n, x.clone()), v))
        .collect())
}

pub fn stieltjes_constant(n: usize, x: &BigRational, ctx: &EvalContext) -> Result<StieltjesConstant> {
    Ok(StieltjesConstant {
        n,
        x: x.clone(),
        value: stieltjes(n, x, ctx)?,
    })
}

/// Euler's constant `gamma = gamma_0(1)`.
pub fn euler_gamma(ctx: &EvalContext) -> f64 {
    stieltjes(0, &BigRational::one(), ctx).expect("gamma_0(1) is always in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn euler_constant() {
        let ctx = EvalContext::default();
        assert!((euler_gamma(&ctx) - 0.5772156649015329).abs() < 1e-15);
        assert_eq!(format!("{:.5}", euler_gamma(&ctx)), "0.57722");
    }

    #[test]
    fn rejects_out_of_range() {
        let ctx = EvalContext::default();
        assert!(stieltjes(0, &rat(3, 2), &ctx).is_err());
        assert!(stieltjes(0, &int(0), &ctx).is_err());
        assert!(stieltjes(11, &int(1), &ctx).is_err());
    }

    #[test]
    fn insensitive_to_truncation() {
        // The Euler–Maclaurin tail is exact to rounding; moving M must not matter.
        let a = stieltjes_all_f64(6, 0.3, 40, 15);
        let b = stieltjes_all_f64(6, 0.3, 120, 12);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-11 * (1.0 + x.abs()), "{x} vs {y}");
        }
    }

    #[test]
    fn cache_is_filled_for_all_orders() {
        let ctx = EvalContext::default();
        let v = stieltjes_all(3, &rat(1, 2), &ctx).unwrap();
        assert_eq!(ctx.stieltjes_cache_len(), 4);
        assert_eq!(stieltjes(2, &rat(1, 2), &ctx).unwrap(), v[2]);
    }
}
