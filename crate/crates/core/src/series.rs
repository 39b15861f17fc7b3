//! Truncated Taylor expansions ("jets") in a small increment `eps`.
//!
//! A jet of order `n` stores the first `n + 1` Taylor coefficients of a
//! function around a base point, so the k-th derivative there is
//! `k! * coeff[k]`. Products of jets follow the Leibniz rule exactly, which is
//! how all s-derivatives of Euler–Maclaurin terms are obtained in closed form.

use num_complex::Complex64;
use num_traits::Num;
use std::ops::{Add, Mul, Neg};

pub trait Scalar: Copy + Num + Neg<Output = Self> + std::fmt::Debug {
    fn from_f64(v: f64) -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }
}

impl Scalar for Complex64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        Complex64::new(v, 0.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Jet<T> {
    pub fn zero(order: usize) -> Self {
        Jet {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(value: T, order: usize) -> Self {
        let mut j = Self::zero(order);
        j.coeffs[0] = value;
        j
    }

    /// `value + eps`.
    pub fn variable(value: T, order: usize) -> Self {
        let mut j = Self::constant(value, order);
        if order >= 1 {
            j.coeffs[1] = T::one();
        }
        j
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet { coeffs }
    }

    /// `scale * exp(rate * eps)`.
    pub fn exp_linear(scale: T, rate: T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = scale;
        coeffs.push(term);
        for k in 1..=order {
            term = term * rate / T::from_f64(k as f64);
            coeffs.push(term);
        }
        Jet { coeffs }
    }

    /// `1 / (base + eps)`.
    pub fn reciprocal_linear(base: T, order: usize) -> Self {
        let inv = T::one() / base;
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = inv;
        coeffs.push(term);
        for _ in 1..=order {
            term = -term * inv;
            coeffs.push(term);
        }
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn value(&self) -> T {
        self.coeffs[0]
    }

    /// k-th derivative at the base point.
    pub fn derivative(&self, k: usize) -> T {
        let mut fact = 1.0;
        for i in 2..=k {
            fact *= i as f64;
        }
        self.coeffs[k] * T::from_f64(fact)
    }

    /// All derivatives `f, f', ..., f^(order)`.
    pub fn derivatives(&self) -> Vec<T> {
        let mut fact = 1.0;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                if k > 1 {
                    fact *= k as f64;
                }
                c * T::from_f64(fact)
            })
            .collect()
    }

    pub fn scale(&self, factor: T) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Jet<T>, factor: T) {
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = *a + b * factor;
        }
    }

    /// Multiplies by the linear factor `(c + eps)`.
    pub fn mul_linear(&self, c: T) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![T::zero(); n];
        for k in 0..n {
            out[k] = self.coeffs[k] * c;
            if k > 0 {
                out[k] = out[k] + self.coeffs[k - 1];
            }
        }
        Jet { coeffs: out }
    }

    pub fn mul_jet(&self, other: &Jet<T>) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![T::zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate().take(n) {
            for (j, &b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Jet { coeffs: out }
    }
}

impl Jet<f64> {
    /// `ln(base + eps)` for `base > 0`.
    pub fn ln_linear(base: f64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(base.ln());
        let inv = 1.0 / base;
        let mut pow = 1.0;
        for r in 1..=order {
            pow *= inv;
            let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
            coeffs.push(sign * pow / r as f64);
        }
        Jet { coeffs }
    }
}

impl<T: Scalar> Add for &Jet<T> {
    type Output = Jet<T>;
    fn add(self, rhs: &Jet<T>) -> Jet<T> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        Jet {
            coeffs: (0..n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: &Jet<T>) -> Jet<T> {
        self.mul_jet(rhs)
    }
}
