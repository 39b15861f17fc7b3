//! Hurwitz decompositions of `zeta_N(s, x | w)` for rational periods.
//!
//! With `w = lcm(r_i) / gcd(q_i)` for `w_i = r_i / q_i`, the integers
//! `l_i = w / w_i` fold the lattice `x + sum n_i w_i` onto `w (y + n)` with
//!
//! ```text
//! y(k_1..k_N) = (x + k_1 w_1 + ... + k_N w_N) / w,   0 <= k_i < l_i
//! ```
//!
//! and `zeta_N(s, x | w) = w^{-s} / (N-1)! sum_{k_i} sum_k C^{(k)}_{N,y}(0)/k! zeta(s-k, y)`
//! where `C_N(t) = (t+1)...(t+N-1)` and `C_{N,y}(t) = C_N(t - y)`.

use crate::context::EvalContext;
use crate::error::{Result, ZetaError};
use crate::exact::{
    format_rational, gcd_all, int, lcm_all, rational_serde, to_f64, BigRational, PeriodVector,
    RationalPolynomial,
};
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_em, ComplexValue, POLE_GUARD};
use crate::sum::ComplexSum;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Largest lattice `l_1 ... l_N` a decomposition may enumerate.
pub const MAX_LATTICE: usize = 4_000_000;

/// Common scale `w` and fold counts `l_i = w / w_i`.
pub fn scale_params(w_vec: &PeriodVector) -> Result<(BigRational, Vec<usize>)> {
    let w = BigRational::new(lcm_all(w_vec.numerators()), gcd_all(w_vec.denominators()));
    let mut ells = Vec::with_capacity(w_vec.len());
    for wi in w_vec.entries() {
        let l = &w / wi;
        if !l.is_integer() {
            return Err(ZetaError::Internal(format!(
                "w / w_i = {} is not an integer",
                format_rational(&l)
            )));
        }
        let l = l
            .to_integer()
            .to_usize()
            .ok_or_else(|| ZetaError::Internal("fold count does not fit in usize".into()))?;
        ells.push(l);
    }
    Ok((w, ells))
}

fn lattice_size(ells: &[usize]) -> Result<usize> {
    let size = ells
        .iter()
        .try_fold(1usize, |acc, &l| acc.checked_mul(l))
        .unwrap_or(usize::MAX);
    crate::error::check_cap("lattice size", size, MAX_LATTICE)?;
    Ok(size)
}

/// `C_N(t) = (t+1)(t+2)...(t+N-1)`, with `C_1 = 1`.
pub fn c_base(n: usize) -> RationalPolynomial {
    (1..n as i64).fold(RationalPolynomial::one(), |acc, i| {
        &acc * &RationalPolynomial::linear(int(i), BigRational::one())
    })
}

/// `C_{N,x}(t) = C_N(t - x)` as a polynomial in `t`.
pub fn c_polynomial(n: usize, x: &BigRational) -> RationalPolynomial {
    c_base(n).compose_linear(&BigRational::one(), &-x)
}

/// Taylor polynomials `D_k = C_N^{(k)} / k!`, so that the coefficient of
/// `t^k` in `C_N(t - y)` is `D_k(-y)`.
pub(crate) fn c_taylor(n: usize) -> Vec<RationalPolynomial> {
    let mut out = Vec::with_capacity(n);
    let mut d = c_base(n);
    for k in 0..n {
        out.push(d.clone());
        d = d.derivative().scale(&BigRational::new(1.into(), (k as i64 + 1).into()));
    }
    out
}

fn factorial(n: usize) -> BigRational {
    (1..=n as i64).fold(BigRational::one(), |acc, i| acc * int(i))
}

/// One summand `coeff * zeta(s - k, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzTerm {
    pub k: usize,
    #[serde(with = "rational_serde")]
    pub y: BigRational,
    #[serde(with = "rational_serde")]
    pub coeff: BigRational,
}

/// `zeta_N(s, x | w) = w^{-s} sum coeff * zeta(s - k, y)`, with `1/(N-1)!`
/// folded into the coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzDecomposition {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(with = "rational_serde")]
    pub w: BigRational,
    pub terms: Vec<HurwitzTerm>,
}

fn check_inputs(n: usize, w_vec: &PeriodVector) -> Result<()> {
    if n == 0 {
        return Err(ZetaError::Domain("N must be at least 1".into()));
    }
    if w_vec.len() != n {
        return Err(ZetaError::Domain(format!(
            "expected {n} periods, got {}",
            w_vec.len()
        )));
    }
    Ok(())
}

/// Calls `f(shift)` for every lattice point, where `shift = sum k_i w_i / w`.
fn for_each_shift(
    w_vec: &PeriodVector,
    w: &BigRational,
    ells: &[usize],
    mut f: impl FnMut(&BigRational),
) {
    let steps: Vec<BigRational> = w_vec.entries().iter().map(|wi| wi / w).collect();
    let mut idx = vec![0usize; ells.len()];
    let mut shift = BigRational::zero();
    loop {
        f(&shift);
        // odometer increment, keeping the running shift in step
        let mut pos = 0;
        loop {
            if pos == ells.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < ells[pos] {
                shift += &steps[pos];
                break;
            }
            shift -= &steps[pos] * int(idx[pos] as i64 - 1);
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn decompose_impl(n: usize, x: &BigRational, w_vec: &PeriodVector, merge: bool) -> Result<HurwitzDecomposition> {
    check_inputs(n, w_vec)?;
    if !x.is_positive() {
        return Err(ZetaError::Domain(format!("x must be positive, got {}", format_rational(x))));
    }
    let (w, ells) = scale_params(w_vec)?;
    lattice_size(&ells)?;
    let taylor = c_taylor(n);
    let norm = factorial(n - 1).recip();
    let base = x / &w;
    let mut raw = Vec::new();
    let mut merged: BTreeMap<(BigRational, usize), BigRational> = BTreeMap::new();
    for_each_shift(w_vec, &w, &ells, |shift| {
        let y = &base + shift;
        let neg_y = -&y;
        for (k, d) in taylor.iter().enumerate() {
            let coeff = d.eval(&neg_y) * &norm;
            if merge {
                *merged.entry((y.clone(), k)).or_insert_with(BigRational::zero) += coeff;
            } else if !coeff.is_zero() {
                raw.push(HurwitzTerm { k, y: y.clone(), coeff });
            }
        }
    });
    let terms = if merge {
        merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((y, k), coeff)| HurwitzTerm { k, y, coeff })
            .collect()
    } else {
        raw
    };
    Ok(HurwitzDecomposition { n, w, terms })
}

/// Exact decomposition with equal `(k, y)` terms merged, sorted by `y` then `k`.
pub fn decompose(n: usize, x: &BigRational, w_vec: &PeriodVector) -> Result<HurwitzDecomposition> {
    decompose_impl(n, x, w_vec, true)
}

/// The raw lattice sum, one term per `(k_1..k_N, k)` with nonzero coefficient.
pub fn decompose_unmerged(n: usize, x: &BigRational, w_vec: &PeriodVector) -> Result<HurwitzDecomposition> {
    decompose_impl(n, x, w_vec, false)
}

pub(crate) fn check_poles(n: usize, s: ComplexValue) -> Result<()> {
    for pole in 1..=n as i64 {
        let d = s - pole as f64;
        if d.norm() < POLE_GUARD {
            return Err(ZetaError::Pole {
                re: s.re,
                im: s.im,
                pole,
                radius: POLE_GUARD,
            });
        }
    }
    Ok(())
}

fn scale_power(w: f64, s: ComplexValue) -> ComplexValue {
    (-s * w.ln()).exp()
}

/// `w^{-s} sum coeff * zeta(s - k, y)`.
pub fn eval_decomposition(d: &HurwitzDecomposition, s: ComplexValue, ctx: &EvalContext) -> Result<ComplexValue> {
    check_poles(d.n, s)?;
    let mut acc = ComplexSum::new();
    for t in &d.terms {
        acc.add(hurwitz_zeta(s - t.k as f64, to_f64(&t.y), ctx)? * to_f64(&t.coeff));
    }
    Ok(scale_power(to_f64(&d.w), s) * acc.value())
}

impl HurwitzDecomposition {
    pub fn eval(&self, s: ComplexValue, ctx: &EvalContext) -> Result<ComplexValue> {
        eval_decomposition(self, s, ctx)
    }

    /// Value together with an error estimate: the per-term Euler–Maclaurin
    /// estimates plus rounding, weighted by `|coeff|` and `|w^{-s}|`.
    pub fn eval_with_error(&self, s: ComplexValue, ctx: &EvalContext) -> Result<(ComplexValue, f64)> {
        check_poles(self.n, s)?;
        let mut acc = ComplexSum::new();
        let mut err = 0.0;
        for t in &self.terms {
            let c = to_f64(&t.coeff);
            let e = hurwitz_zeta_em(0, s - t.k as f64, to_f64(&t.y), ctx)?;
            let z = e.derivatives[0];
            acc.add(z * c);
            err += c.abs() * (e.error_estimate + f64::EPSILON * z.norm());
        }
        let scale = scale_power(to_f64(&self.w), s);
        Ok((scale * acc.value(), err * scale.norm()))
    }

    /// Number of distinct arguments `y`.
    pub fn distinct_arguments(&self) -> usize {
        let mut ys: Vec<&BigRational> = self.terms.iter().map(|t| &t.y).collect();
        ys.sort();
        ys.dedup();
        ys.len()
    }
}

/// Summand of a decomposition with `x` left symbolic: `coeff(x) zeta(s - k, x/w + shift)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicTerm {
    pub k: usize,
    #[serde(with = "rational_serde")]
    pub shift: BigRational,
    pub coeff: RationalPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicDecomposition {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(with = "rational_serde")]
    pub w: BigRational,
    pub terms: Vec<SymbolicTerm>,
}

/// Decomposition whose coefficients are polynomials in `x`.
pub fn decompose_symbolic(n: usize, w_vec: &PeriodVector) -> Result<SymbolicDecomposition> {
    check_inputs(n, w_vec)?;
    let (w, ells) = scale_params(w_vec)?;
    lattice_size(&ells)?;
    let taylor = c_taylor(n);
    let norm = factorial(n - 1).recip();
    let neg_alpha = -w.recip();
    let mut merged: BTreeMap<(BigRational, usize), RationalPolynomial> = BTreeMap::new();
    for_each_shift(w_vec, &w, &ells, |shift| {
        let neg_shift = -shift;
        for (k, d) in taylor.iter().enumerate() {
            let coeff = d.compose_linear(&neg_alpha, &neg_shift).scale(&norm);
            let slot = merged
                .entry((shift.clone(), k))
                .or_insert_with(RationalPolynomial::zero);
            *slot = &*slot + &coeff;
        }
    });
    let terms = merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((shift, k), coeff)| SymbolicTerm { k, shift, coeff })
        .collect();
    Ok(SymbolicDecomposition { n, w, terms })
}

impl SymbolicDecomposition {
    /// Substitutes a rational `x`, giving the exact decomposition at that point.
    pub fn at(&self, x: &BigRational) -> HurwitzDecomposition {
        let base = x / &self.w;
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let coeff = t.coeff.eval(x);
                (!coeff.is_zero()).then(|| HurwitzTerm {
                    k: t.k,
                    y: &base + &t.shift,
                    coeff,
                })
            })
            .collect();
        HurwitzDecomposition {
            n: self.n,
            w: self.w.clone(),
            terms,
        }
    }

    /// Substitutes a real `x`; coefficients are evaluated in floating point.
    pub fn at_real(&self, x: f64, periods: PeriodVector) -> RealDecomposition {
        let inv_w = to_f64(&self.w.recip());
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let coeff = t.coeff.eval_f64(x);
                (coeff != 0.0).then(|| RealTerm {
                    k: t.k,
                    shift: t.shift.clone(),
                    y: x * inv_w + to_f64(&t.shift),
                    coeff,
                })
            })
            .collect();
        RealDecomposition {
            n: self.n,
            w: self.w.clone(),
            periods,
            x,
            terms,
        }
    }
}

fn fmt_argument(inv_w: &BigRational, shift: &BigRational) -> String {
    let (p, q) = (inv_w.numer(), inv_w.denom());
    let mut out = match (p.is_one(), q.is_one()) {
        (true, true) => "x".to_string(),
        (true, false) => format!("x/{q}"),
        (false, true) => format!("{p}x"),
        (false, false) => format!("{p}x/{q}"),
    };
    if !shift.is_zero() {
        out.push('+');
        out.push_str(&format_rational(shift));
    }
    out
}

fn fmt_coeff(c: &RationalPolynomial) -> String {
    if c.degree() == Some(0) {
        let v = c.coeff(0);
        if v.is_one() {
            return String::new();
        }
        if v == -BigRational::one() {
            return "-".into();
        }
    }
    format!("({})", c.display_in("x"))
}

fn push_term(body: &mut String, coeff: String, k: usize, arg: &str) {
    if !body.is_empty() && !coeff.starts_with('-') {
        body.push('+');
    }
    body.push_str(&coeff);
    let s = if k == 0 { "s".to_string() } else { format!("s-{k}") };
    body.push_str(&format!("ζ({s},{arg})"));
}

fn write_scaled(f: &mut fmt::Formatter<'_>, w: &BigRational, mut body: String) -> fmt::Result {
    if body.is_empty() {
        body.push('0');
    }
    if w.is_one() {
        write!(f, "{body}")
    } else if w.is_integer() {
        write!(f, "{w}^{{-s}}({body})")
    } else {
        write!(f, "({})^{{-s}}({body})", format_rational(w))
    }
}

/// Prints e.g. `2^{-s}((1-x/2)ζ(s,x/2)+ζ(s-1,x/2)+...)`.
impl fmt::Display for SymbolicDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv_w = self.w.recip();
        let mut body = String::new();
        for t in &self.terms {
            push_term(&mut body, fmt_coeff(&t.coeff), t.k, &fmt_argument(&inv_w, &t.shift));
        }
        write_scaled(f, &self.w, body)
    }
}

/// Prints e.g. `2^{-s}((2/3)ζ(s,1/6)+ζ(s-1,1/6)+...)`.
impl fmt::Display for HurwitzDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for t in &self.terms {
            let coeff = fmt_coeff(&RationalPolynomial::constant(t.coeff.clone()));
            push_term(&mut body, coeff, t.k, &format_rational(&t.y));
        }
        write_scaled(f, &self.w, body)
    }
}

/// Float-lane summand: `coeff zeta(s - k, y)` with `y = x/w + shift`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealTerm {
    pub k: usize,
    #[serde(with = "rational_serde")]
    pub shift: BigRational,
    pub y: f64,
    pub coeff: f64,
}

/// Decomposition for a real `x` and rationalized periods.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealDecomposition {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(with = "rational_serde")]
    pub w: BigRational,
    pub periods: PeriodVector,
    pub x: f64,
    pub terms: Vec<RealTerm>,
}

impl RealDecomposition {
    pub fn eval(&self, s: ComplexValue, ctx: &EvalContext) -> Result<ComplexValue> {
        check_poles(self.n, s)?;
        let mut acc = ComplexSum::new();
        for t in &self.terms {
            acc.add(hurwitz_zeta(s - t.k as f64, t.y, ctx)? * t.coeff);
        }
        Ok(scale_power(to_f64(&self.w), s) * acc.value())
    }
}

/// Rationalizes each period by its best convergent with denominator at most
/// `max_den`, then decomposes with `x` kept as a float.
pub fn decompose_real(n: usize, x: f64, w_vec: &[f64], max_den: u64) -> Result<RealDecomposition> {
    if !(x.is_finite() && x > 0.0) {
        return Err(ZetaError::Domain(format!("x must be positive and finite, got {x}")));
    }
    let periods = w_vec
        .iter()
        .map(|&wi| super::best_convergent(wi, max_den))
        .collect::<Result<Vec<_>>>()?;
    let periods = PeriodVector::new(periods)?;
    Ok(decompose_symbolic(n, &periods)?.at_real(x, periods))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_fraction, rat};
    use num_complex::Complex64;

    fn pv(pairs: &[(i64, i64)]) -> PeriodVector {
        PeriodVector::from_pairs(pairs).unwrap()
    }

    fn term(k: usize, y: (i64, i64), c: (i64, i64)) -> HurwitzTerm {
        HurwitzTerm {
            k,
            y: rat(y.0, y.1),
            coeff: rat(c.0, c.1),
        }
    }

    #[test]
    fn scale_params_examples() {
        assert_eq!(scale_params(&pv(&[(1, 1), (1, 2)])).unwrap(), (int(1), vec![1, 2]));
        assert_eq!(scale_params(&pv(&[(1, 1), (2, 1)])).unwrap(), (int(2), vec![2, 1]));
        assert_eq!(scale_params(&pv(&[(1, 1); 3])).unwrap(), (int(1), vec![1, 1, 1]));
        assert_eq!(
            scale_params(&pv(&[(3, 4), (5, 6)])).unwrap(),
            (rat(15, 2), vec![10, 9])
        );
    }

    #[test]
    fn c_polynomials() {
        assert_eq!(c_polynomial(1, &rat(2, 7)), RationalPolynomial::one());
        let x = rat(1, 3);
        assert_eq!(
            c_polynomial(2, &x),
            RationalPolynomial::linear(rat(2, 3), int(1))
        );
        assert_eq!(
            c_polynomial(3, &int(0)),
            RationalPolynomial::new(vec![int(2), int(3), int(1)])
        );
    }

    #[test]
    fn two_periods_one_half() {
        let d = decompose(2, &rat(1, 3), &pv(&[(1, 1), (1, 2)])).unwrap();
        assert_eq!(d.w, int(1));
        assert_eq!(
            d.terms,
            vec![
                term(0, (1, 3), (2, 3)),
                term(1, (1, 3), (1, 1)),
                term(0, (5, 6), (1, 6)),
                term(1, (5, 6), (1, 1)),
            ]
        );
    }

    #[test]
    fn single_period() {
        let d = decompose(1, &rat(5, 4), &pv(&[(1, 1)])).unwrap();
        assert_eq!(d.terms, vec![term(0, (5, 4), (1, 1))]);
        let d = decompose(1, &rat(3, 2), &pv(&[(3, 4)])).unwrap();
        assert_eq!(d.w, rat(3, 4));
        assert_eq!(d.terms, vec![term(0, (2, 1), (1, 1))]);
    }

    #[test]
    fn three_periods_raw_lattice() {
        let w = pv(&[(1, 1), (1, 2), (1, 3)]);
        let x = rat(1, 3);
        let raw = decompose_unmerged(3, &x, &w).unwrap();
        // 6 lattice points times 3 values of k; the k = 0 term at y = 1 and
        // the k = 1 term at y = 3/2 vanish
        assert_eq!(raw.terms.len(), 16);
        let d = decompose(3, &x, &w).unwrap();
        assert_eq!(d.distinct_arguments(), 6);
        let ys: Vec<String> = d.terms.iter().map(|t| format_rational(&t.y)).collect();
        let mut distinct = ys.clone();
        distinct.dedup();
        assert_eq!(distinct, ["1/3", "2/3", "5/6", "1", "7/6", "3/2"]);
    }

    #[test]
    fn symbolic_matches_exact() {
        let w = pv(&[(1, 1), (1, 2), (1, 3)]);
        let sym = decompose_symbolic(3, &w).unwrap();
        for x in ["1/3", "2/5", "7/2"] {
            let x = parse_fraction(x).unwrap();
            assert_eq!(sym.at(&x), decompose(3, &x, &w).unwrap());
        }
    }

    #[test]
    fn symbolic_display() {
        let sym = decompose_symbolic(2, &pv(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(
            sym.to_string(),
            "2^{-s}((1-x/2)ζ(s,x/2)+ζ(s-1,x/2)+(1/2-x/2)ζ(s,x/2+1/2)+ζ(s-1,x/2+1/2))"
        );
        let sym = decompose_symbolic(2, &pv(&[(1, 1), (1, 2)])).unwrap();
        assert_eq!(
            sym.to_string(),
            "(1-x)ζ(s,x)+ζ(s-1,x)+(1/2-x)ζ(s,x+1/2)+ζ(s-1,x+1/2)"
        );
        assert_eq!(decompose_symbolic(1, &pv(&[(1, 1)])).unwrap().to_string(), "ζ(s,x)");
        let sym = decompose_symbolic(3, &pv(&[(1, 1); 3])).unwrap();
        assert_eq!(sym.to_string(), "(1-3x/2+x^2/2)ζ(s,x)+(3/2-x)ζ(s-1,x)+(1/2)ζ(s-2,x)");
    }

    #[test]
    fn real_lane_matches_exact_for_rational_input() {
        let exact = decompose(2, &rat(1, 4), &pv(&[(1, 1), (1, 2)])).unwrap();
        let real = decompose_real(2, 0.25, &[1.0, 0.5], 10).unwrap();
        assert_eq!(real.w, exact.w);
        assert_eq!(real.terms.len(), exact.terms.len());
        for (r, e) in real.terms.iter().zip(&exact.terms) {
            assert_eq!(r.k, e.k);
            assert_eq!(r.y, to_f64(&e.y));
            assert_eq!(r.coeff, to_f64(&e.coeff));
        }
        let real = decompose_real(1, 1.5, &[0.75], 100).unwrap();
        assert_eq!(real.w, rat(3, 4));
        assert_eq!(real.terms.len(), 1);
        assert_eq!(real.terms[0].y, 2.0);
    }

    #[test]
    fn json_shape() {
        let d = decompose(2, &rat(1, 3), &pv(&[(1, 1), (1, 2)])).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["N"], 2);
        assert_eq!(v["w"]["num"], "1");
        assert_eq!(v["terms"][2]["y"]["num"], "5");
        assert_eq!(v["terms"][2]["coeff"]["den"], "6");
        let back: HurwitzDecomposition = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn zero_of_two_period_function() {
        let ctx = EvalContext::default();
        let d = decompose(2, &rat(1, 3), &pv(&[(1, 1), (1, 2)])).unwrap();
        let v = d.eval(Complex64::new(0.2558028917231215, 0.0), &ctx).unwrap();
        assert!(v.norm() < 1e-9, "{v}");
        let d = decompose(3, &rat(1, 3), &pv(&[(1, 1), (1, 2), (1, 3)])).unwrap();
        assert!(d.eval(Complex64::new(0.0, 0.0), &ctx).unwrap().norm() < 1e-10);
    }

    #[test]
    fn poles_are_rejected() {
        let ctx = EvalContext::default();
        let d = decompose(3, &rat(1, 3), &pv(&[(1, 1); 3])).unwrap();
        for p in 1..=3 {
            let err = d.eval(Complex64::new(p as f64, 0.0), &ctx).unwrap_err();
            assert!(matches!(err, ZetaError::Pole { pole, .. } if pole == p));
        }
    }

    #[test]
    fn lattice_cap() {
        let w = pv(&[(1, 1), (1, 9973)]);
        assert!(decompose(2, &int(1), &w).is_ok());
        let w = pv(&[(1, 99991), (1, 99989)]);
        assert!(matches!(
            decompose(2, &int(1), &w),
            Err(ZetaError::CapExceeded { .. })
        ));
    }
}
