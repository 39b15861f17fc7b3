//! Reduction of Barnes zeta functions with rational periods to finite
//! combinations of Hurwitz zeta functions, plus rationalization of real
//! periods and the recurrences in `N`.

mod decompose;
mod rationalize;
mod recurrence;

pub use decompose::{
    c_base, c_polynomial, decompose, decompose_real, decompose_symbolic, decompose_unmerged,
    eval_decomposition, scale_params, HurwitzDecomposition, HurwitzTerm, RealDecomposition,
    RealTerm, SymbolicDecomposition, SymbolicTerm, MAX_LATTICE,
};
pub use rationalize::{best_convergent, DEFAULT_MAX_DEN};
pub use recurrence::{
    complete_homogeneous, multiple_hurwitz_zeta, recurrence_check_k, recurrence_check_n,
};
