//! Dense univariate polynomials with exact rational coefficients.

use super::rational::{format_rational, rational_serde, to_f64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending degree order. Canonical: the vector is empty for
/// the zero polynomial and the last entry is nonzero otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RationalPolynomial { coeffs }.normalize()
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `a + b X`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// `p(a X + b)`.
    pub fn compose_linear(&self, a: &BigRational, b: &BigRational) -> Self {
        let inner = Self::linear(b.clone(), a.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &inner) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct C<'a>(#[serde(with = "rational_serde")] &'a BigRational);
        let v: Vec<C> = self.coeffs.iter().map(C).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct C(#[serde(with = "rational_serde")] BigRational);
        let v: Vec<C> = Vec::deserialize(d)?;
        Ok(RationalPolynomial::new(v.into_iter().map(|c| c.0).collect()))
    }
}

impl RationalPolynomial {
    /// Renders the polynomial in `var`, constant term first, e.g. `1/2-x/2`
    /// or `10/9-7x/3+x^2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if i == 0 {
                out.push_str(&format_rational(&mag));
                continue;
            }
            let monomial = if i == 1 {
                var.to_string()
            } else {
                format!("{var}^{i}")
            };
            let num = mag.numer();
            let den = mag.denom();
            if !num.is_one() {
                out.push_str(&num.to_string());
            }
            out.push_str(&monomial);
            if !den.is_one() {
                out.push('/');
                out.push_str(&den.to_string());
            }
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(c: &[(i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let q = p(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(q.degree(), Some(0));
        assert!(p(&[(0, 1)]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[(1, 1), (1, 1)]); // 1 + X
        let b = p(&[(-1, 1), (1, 1)]); // -1 + X
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(&a - &a, RationalPolynomial::zero());
        assert_eq!((&a * &a).eval(&rat(1, 2)), rat(9, 4));
        assert_eq!(a.pow(3).derivative(), p(&[(3, 1), (6, 1), (3, 1)]));
    }

    #[test]
    fn linear_composition() {
        // (X^2 - 3X + 2) at X = x + 1/3 gives x^2 - 7x/3 + 10/9.
        let c = p(&[(2, 1), (-3, 1), (1, 1)]);
        let shifted = c.compose_linear(&int(1), &rat(1, 3));
        assert_eq!(shifted, p(&[(10, 9), (-7, 3), (1, 1)]));
        assert_eq!(shifted.display_in("x"), "10/9-7x/3+x^2");
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[(1, 2), (-1, 2)]).display_in("x"), "1/2-x/2");
        assert_eq!(p(&[(1, 1), (-1, 1)]).display_in("x"), "1-x");
        assert_eq!(p(&[(0, 1), (3, 2)]).display_in("x"), "3x/2");
        assert_eq!(p(&[(-5, 36)]).display_in("x"), "-5/36");
    }
}
