//! Floating-point Hurwitz lane: Euler–Maclaurin continuation and derivatives,
//! generalized Stieltjes constants, polygamma values and `Gamma^{(a)}(m)`.

mod euler_maclaurin;
mod gamma;
mod stieltjes;

pub use euler_maclaurin::{
    hurwitz_zeta, hurwitz_zeta_deriv, hurwitz_zeta_deriv_real, hurwitz_zeta_em, ComplexValue,
    EmEvaluation, MAX_DERIV, POLE_GUARD,
};
pub use gamma::{
    bell_complete, bell_complete_all, gamma_deriv, gamma_derivs, psi_deriv, riemann_zeta_int,
    MAX_GAMMA_DERIV,
};
pub use stieltjes::{
    euler_gamma, stieltjes, stieltjes_all, stieltjes_all_f64, stieltjes_constant,
    StieltjesConstant, MAX_STIELTJES,
};
