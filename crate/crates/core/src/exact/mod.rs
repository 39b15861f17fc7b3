//! Exact rational lane: arbitrary-precision rationals, Bernoulli numbers,
//! Bernoulli–Barnes polynomials and exact Barnes zeta values at
//! non-positive integers.

mod barnes;
mod bernoulli;
mod poly;
mod rational;

pub use barnes::{barnes_value_nonpos, bernoulli_barnes_poly};
pub use bernoulli::{bernoulli_number, bernoulli_polynomial, binomial, hurwitz_value_nonpos};
pub use num_rational::BigRational;
pub use poly::RationalPolynomial;
pub use rational::{
    format_rational, int, parse_fraction, rat, rational_serde, to_f64, PeriodVector,
    RationalRepr,
};
pub(crate) use rational::{gcd_all, lcm_all};
