//! Closed forms for `zeta^{(j)}(-l, y)` at rational `y` and for
//! `zeta_N^{(n)}(-l, x | w)` with rational `x` and periods.
//!
//! With `y = Y + u/v`, `1 <= u <= v`, and `m = l + 1`, the functional equation
//! `zeta(1-s, u/v) = 2 Gamma(s) (2 pi v)^{-s} H(s, u/v)` differentiated `j` times gives
//!
//! ```text
//! zeta^{(j)}(-l, y) = (-1)^j 2 sum_{a+b+c=j} j!/(a! b! c!) Gamma^{(a)}(m)
//!                       (-log 2 pi v)^b (2 pi v)^{-m} H^{(c)}(m, u/v)
//!                     - sum_{t<Y} (-log(t + u/v))^j (t + u/v)^l
//! ```
//!
//! where `a, b, c` range over all non-negative triples.

use super::h_function::h_table;
use crate::context::EvalContext;
use crate::error::{check_cap, Result, ZetaError};
use crate::exact::{format_rational, to_f64, BigRational, PeriodVector};
use crate::hurwitz::gamma_derivs;
use crate::reduction::decompose;
use crate::sum::NeumaierSum;
use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use std::collections::HashMap;
use std::f64::consts::PI;

pub const MAX_J: usize = 8;
pub const MAX_N: usize = 5;
pub const MAX_ELL: usize = 4;
pub const MAX_PERIODS: usize = 4;

/// `y = Y + u/v` with `1 <= u <= v`; integers map to `u = v = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracDecomp {
    pub y: BigRational,
    pub big_y: u64,
    pub u: u64,
    pub v: u64,
}

pub fn frac_decomp(y: &BigRational) -> Result<FracDecomp> {
    if !y.is_positive() {
        return Err(ZetaError::Domain(format!("y must be positive, got {}", format_rational(y))));
    }
    let too_big = || ZetaError::Domain(format!("{} is too large to split", format_rational(y)));
    let (num, den) = (y.numer(), y.denom());
    // Y = ceil(y) - 1 keeps the fractional representative in (0, 1]
    let big_y: BigInt = (num - BigInt::one()).div_floor(den);
    let rem = num - &big_y * den;
    let g = rem.gcd(den);
    Ok(FracDecomp {
        y: y.clone(),
        big_y: big_y.to_u64().ok_or_else(too_big)?,
        u: (&rem / &g).to_u64().ok_or_else(too_big)?,
        v: (den / &g).to_u64().ok_or_else(too_big)?,
    })
}

fn multinomial(j: usize, a: usize, b: usize) -> f64 {
    let fact = |n: usize| (1..=n).map(|i| i as f64).product::<f64>();
    fact(j) / (fact(a) * fact(b) * fact(j - a - b))
}

/// Shared inputs for one `(m, v)` pair and derivative orders up to `j_max`.
struct Inner<'a> {
    gamma: &'a [f64],
    h: &'a [f64],
    v: u64,
}

fn assemble(j: usize, m: usize, fd: &FracDecomp, inner: &Inner) -> f64 {
    let two_pi_v = 2.0 * PI * fd.v as f64;
    let log_term = -two_pi_v.ln();
    let scale = two_pi_v.powi(-(m as i32));
    let n = inner.v as usize;
    let mut acc = NeumaierSum::new();
    for a in 0..=j {
        for b in 0..=j - a {
            let c = j - a - b;
            let h = inner.h[c * n + (fd.u as usize - 1)];
            acc.add(multinomial(j, a, b) * inner.gamma[a] * log_term.powi(b as i32) * h);
        }
    }
    let sign = if j % 2 == 0 { 2.0 } else { -2.0 };
    let mut out = NeumaierSum::new();
    out.add(sign * scale * acc.value());
    let ell = m as i32 - 1;
    let frac = fd.u as f64 / fd.v as f64;
    for t in 0..fd.big_y {
        let p = t as f64 + frac;
        out.add(-(-p.ln()).powi(j as i32) * p.powi(ell));
    }
    out.value()
}

/// `zeta^{(j)}(-l, y)` for rational `y > 0`.
pub fn hurwitz_deriv_nonpos_rational(j: usize, ell: usize, y: &BigRational, ctx: &EvalContext) -> Result<f64> {
    check_cap("derivative order j", j, MAX_J)?;
    let fd = frac_decomp(y)?;
    let m = ell + 1;
    let gamma = gamma_derivs(j, m, ctx)?;
    let h = h_table(j, m, fd.v, ctx)?;
    Ok(assemble(j, m, &fd, &Inner { gamma: &gamma, h: &h, v: fd.v }))
}

/// `zeta_N^{(n)}(-l, x | w)` for rational `x` and periods.
pub fn barnes_deriv_nonpos(
    n: usize,
    ell: usize,
    big_n: usize,
    x: &BigRational,
    w_vec: &PeriodVector,
    ctx: &EvalContext,
) -> Result<f64> {
    check_cap("derivative order n", n, MAX_N)?;
    check_cap("l", ell, MAX_ELL)?;
    check_cap("N", big_n, MAX_PERIODS)?;
    let d = decompose(big_n, x, w_vec)?;
    let w = to_f64(&d.w);
    let log_w = w.ln();

    let mut gammas: HashMap<usize, Vec<f64>> = HashMap::new();
    // inner[j] = sum_terms coeff * zeta^{(j)}(-l-k, y)
    let mut inner = vec![NeumaierSum::new(); n + 1];
    let mut last: Option<FracDecomp> = None;
    for t in &d.terms {
        let fd = match &last {
            Some(fd) if fd.y == t.y => fd.clone(),
            _ => frac_decomp(&t.y)?,
        };
        let m = ell + t.k + 1;
        if !gammas.contains_key(&m) {
            gammas.insert(m, gamma_derivs(n, m, ctx)?);
        }
        let h = h_table(n, m, fd.v, ctx)?;
        let parts = Inner {
            gamma: &gammas[&m],
            h: &h,
            v: fd.v,
        };
        let coeff = to_f64(&t.coeff);
        for (j, acc) in inner.iter_mut().enumerate() {
            acc.add(coeff * assemble(j, m, &fd, &parts));
        }
        last = Some(fd);
    }

    let binom = |n: usize, k: usize| (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
    let mut out = NeumaierSum::new();
    for (j, acc) in inner.iter().enumerate() {
        out.add(binom(n, j) * (-log_w).powi((n - j) as i32) * acc.value());
    }
    Ok(w.powi(ell as i32) * out.value())
}
