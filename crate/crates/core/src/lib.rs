//! Barnes multiple zeta functions with rational periods.
//!
//! The crate evaluates `zeta_N(s, x | w_1, ..., w_N)` by reducing it to a
//! finite combination of Hurwitz zeta functions, computes its higher
//! s-derivatives at non-positive integers in closed form, and provides the
//! supporting special functions: generalized Stieltjes constants, `Gamma^{(n)}`
//! at positive integers, and multiple gamma functions with their Kummer-type
//! Fourier expansions. An exact rational lane (Bernoulli–Barnes polynomials)
//! cross-checks the floating-point lane at non-positive integers.

pub mod context;
pub mod error;
pub mod exact;
pub mod hurwitz;
pub mod multigamma;
pub mod reduction;
pub mod series;
pub mod special_values;
pub mod sum;

pub use context::EvalContext;
pub use error::{Result, ZetaError};

/// Formats a float with 17 significant digits, which round-trips any `f64`.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}
