//! Higher derivatives at non-positive integers: `H^{(c)}(m, u/v)`, the
//! functional-equation route to `zeta^{(j)}(-l, y)` for rational `y`, and
//! `zeta_N^{(n)}(-l, x | w)` assembled over the Hurwitz decomposition.

mod assemble;
mod grid;
mod h_function;

pub use assemble::{
    barnes_deriv_nonpos, frac_decomp, hurwitz_deriv_nonpos_rational, FracDecomp, MAX_ELL, MAX_J,
    MAX_N, MAX_PERIODS,
};
pub use grid::{barnes_zeta0_grid, grid_nodes, Grid, GRID_MAX_DEN};
pub use h_function::{epsilon_term, h_deriv, h_deriv_direct, h_table};
