//! Bernoulli numbers and classical Bernoulli polynomials.
//!
//! Convention: `B_1 = -1/2`, i.e. the coefficients of `t / (e^t - 1)`.

use super::poly::RationalPolynomial;
use super::rational::int;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::{OnceLock, RwLock};

fn table() -> &'static RwLock<Vec<BigRational>> {
    static TABLE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigRational::one()]))
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `B_n`, memoized process-wide.
pub fn bernoulli_number(n: usize) -> BigRational {
    if let Some(b) = table().read().expect("bernoulli table poisoned").get(n) {
        return b.clone();
    }
    let mut guard = table().write().expect("bernoulli table poisoned");
    // Another caller may have extended the table while we waited.
    while guard.len() <= n {
        let m = guard.len();
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = BigRational::zero();
        for (k, b) in guard.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m + 1, k)) * b;
        }
        let next = -acc / int(m as i64 + 1);
        guard.push(next);
    }
    guard[n].clone()
}

/// Classical Bernoulli polynomial `B_n(y) = sum_k C(n,k) B_k y^{n-k}`.
pub fn bernoulli_polynomial(n: usize) -> RationalPolynomial {
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = BigRational::from_integer(binomial(n, k)) * bernoulli_number(k);
    }
    RationalPolynomial::new(coeffs)
}

/// Exact `zeta(-m, y) = -B_{m+1}(y) / (m + 1)`.
pub fn hurwitz_value_nonpos(m: usize, y: &BigRational) -> BigRational {
    -bernoulli_polynomial(m + 1).eval(y) / int(m as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    /// Akiyama–Tanigawa algorithm; yields B_n with B_1 = +1/2.
    fn akiyama_tanigawa(n: usize) -> BigRational {
        let mut a: Vec<BigRational> = Vec::new();
        for m in 0..=n {
            a.push(BigRational::new(1.into(), (m as i64 + 1).into()));
            for j in (1..=m).rev() {
                a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn agrees_with_independent_algorithm() {
        for n in 2..40 {
            assert_eq!(bernoulli_number(n), akiyama_tanigawa(n), "B_{n}");
        }
    }

    #[test]
    fn hurwitz_nonpos_known_values() {
        // zeta(0, x) = 1/2 - x and zeta(-1, x) = -(x^2 - x + 1/6)/2
        let x = rat(1, 10);
        assert_eq!(hurwitz_value_nonpos(0, &x), rat(2, 5));
        assert_eq!(
            hurwitz_value_nonpos(1, &x),
            -(rat(1, 100) - rat(1, 10) + rat(1, 6)) / int(2)
        );
        // zeta(-1) = -1/12, zeta(-2) = 0, zeta(-3) = 1/120
        assert_eq!(hurwitz_value_nonpos(1, &int(1)), rat(-1, 12));
        assert_eq!(hurwitz_value_nonpos(2, &int(1)), int(0));
        assert_eq!(hurwitz_value_nonpos(3, &int(1)), rat(1, 120));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
