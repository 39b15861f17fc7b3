//! Bernoulli–Barnes polynomials and exact Barnes zeta values at
//! non-positive integers.
//!
//! `B_k(X | w)` is defined by
//!
//! ```text
//! t^N e^{(w_1+...+w_N - X) t} / prod_i (e^{w_i t} - 1) = sum_k B_k(X | w) t^k / k!
//! ```
//!
//! so `B_0(X | w) = 1 / (w_1 ... w_N)`. The left side is expanded as
//! `e^{(S - X) t} / prod_i ((e^{w_i t} - 1) / t)` with truncated power series
//! over the rationals; `X` stays symbolic by carrying polynomial coefficients.

use super::poly::RationalPolynomial;
use super::rational::{int, PeriodVector};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

type Key = (usize, Vec<BigRational>);

fn memo() -> &'static RwLock<HashMap<Key, RationalPolynomial>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, RationalPolynomial>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn factorial(n: usize) -> BigRational {
    (1..=n as i64).fold(BigRational::one(), |acc, i| acc * int(i))
}

/// `(e^{w t} - 1) / t` truncated after `t^order`.
fn exp_minus_one_over_t(w: &BigRational, order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut pow = w.clone();
    for n in 0..=order {
        out.push(&pow / factorial(n + 1));
        pow *= w;
    }
    out
}

fn series_mul(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Reciprocal of a power series with nonzero constant term, by long division.
fn series_inverse(a: &[BigRational], order: usize) -> Vec<BigRational> {
    let inv0 = a[0].recip();
    let mut out = vec![BigRational::zero(); order + 1];
    out[0] = inv0.clone();
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for k in 1..=n.min(a.len() - 1) {
            acc += &a[k] * &out[n - k];
        }
        out[n] = -acc * &inv0;
    }
    out
}

fn compute(k: usize, w: &PeriodVector) -> RationalPolynomial {
    let mut denom = vec![BigRational::zero(); k + 1];
    denom[0] = BigRational::one();
    for wi in w.entries() {
        denom = series_mul(&denom, &exp_minus_one_over_t(wi, k), k);
    }
    let inv = series_inverse(&denom, k);

    // e^{(S - X) t}: the t^m coefficient is (S - X)^m / m!
    let shift = RationalPolynomial::linear(w.sum(), -BigRational::one());
    let mut result = RationalPolynomial::zero();
    let mut power = RationalPolynomial::one();
    for m in 0..=k {
        let c = &inv[k - m] / factorial(m);
        result = &result + &power.scale(&c);
        power = &power * &shift;
    }
    result.scale(&factorial(k))
}

/// `B_k(X | w_1, ..., w_N)` as a polynomial in `X` of degree `k`. Memoized by
/// `(k, w)`.
pub fn bernoulli_barnes_poly(k: usize, w: &PeriodVector) -> RationalPolynomial {
    let key = (k, w.entries().to_vec());
    if let Some(p) = memo().read().expect("barnes memo poisoned").get(&key) {
        return p.clone();
    }
    let p = compute(k, w);
    memo()
        .write()
        .expect("barnes memo poisoned")
        .entry(key)
        .or_insert(p)
        .clone()
}

/// Exact `zeta_N(-ell, x | w) = (-1)^ell ell! / (N + ell)! * B_{N+ell}(x | w)`.
pub fn barnes_value_nonpos(ell: usize, x: &BigRational, w: &PeriodVector) -> BigRational {
    let n = w.len();
    let sign = if ell % 2 == 0 { int(1) } else { int(-1) };
    let b = bernoulli_barnes_poly(n + ell, w).eval(x);
    sign * factorial(ell) / factorial(n + ell) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bernoulli::{bernoulli_polynomial, hurwitz_value_nonpos};
    use crate::exact::rational::rat;

    #[test]
    fn series_inverse_roundtrip() {
        let a = vec![rat(2, 1), rat(1, 3), rat(-1, 5), rat(7, 2)];
        let inv = series_inverse(&a, 3);
        let prod = series_mul(&a, &inv, 3);
        assert_eq!(prod, vec![int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn constant_term_is_inverse_period_product() {
        let w = PeriodVector::from_pairs(&[(1, 2), (3, 1)]).unwrap();
        assert_eq!(bernoulli_barnes_poly(0, &w), RationalPolynomial::constant(rat(2, 3)));
        let unit = PeriodVector::ones(1);
        assert_eq!(bernoulli_barnes_poly(0, &unit), RationalPolynomial::one());
    }

    #[test]
    fn unit_period_is_shifted_classical_bernoulli() {
        // t e^{(1-X)t}/(e^t-1) generates B_k(1 - X) = (-1)^k B_k(X).
        let unit = PeriodVector::ones(1);
        for k in 0..10 {
            let classical = bernoulli_polynomial(k);
            let expected = if k % 2 == 0 {
                classical.clone()
            } else {
                -&classical
            };
            assert_eq!(bernoulli_barnes_poly(k, &unit), expected, "k={k}");
        }
    }

    #[test]
    fn n1_matches_classical_hurwitz_values() {
        let unit = PeriodVector::ones(1);
        for ell in 0..=6 {
            for x in [rat(1, 3), rat(5, 2), int(1)] {
                assert_eq!(
                    barnes_value_nonpos(ell, &x, &unit),
                    hurwitz_value_nonpos(ell, &x)
                );
            }
        }
    }

    #[test]
    fn known_zero_and_hurwitz_limit() {
        let w = PeriodVector::from_pairs(&[(1, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(barnes_value_nonpos(0, &rat(1, 3), &w), int(0));
        assert_eq!(bernoulli_barnes_poly(3, &w).eval(&rat(1, 3)), int(0));
        let unit = PeriodVector::ones(1);
        assert_eq!(barnes_value_nonpos(0, &rat(3, 7), &unit), rat(1, 2) - rat(3, 7));
    }

    #[test]
    fn two_unit_periods_match_hurwitz_reduction() {
        // zeta_2(s, x) = (1 - x) zeta(s, x) + zeta(s - 1, x) at s = 0
        let x = rat(1, 2);
        let expected = (int(1) - &x) * (rat(1, 2) - &x)
            - (&x * &x - &x + rat(1, 6)) / int(2);
        let w = PeriodVector::ones(2);
        assert_eq!(barnes_value_nonpos(0, &x, &w), expected);
        assert_eq!(
            barnes_value_nonpos(0, &x, &w),
            bernoulli_barnes_poly(2, &w).eval(&x) / int(2)
        );
    }
}
