use thiserror::Error;

/// Errors raised by the numerical and symbolic routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error("pole: s = {re}{im:+}i lies within {radius:e} of the pole at s = {pole}")]
    Pole {
        re: f64,
        im: f64,
        pole: i64,
        radius: f64,
    },
    #[error("overflow while evaluating {0}")]
    Overflow(String),
    #[error("internal arithmetic invariant violated: {0}")]
    Internal(String),
    #[error("cannot rationalize {value}: {reason}")]
    Approximation { value: f64, reason: String },
    #[error("series did not converge: tail bound {tail_bound:e} exceeds tolerance {tolerance:e}")]
    Convergence { tail_bound: f64, tolerance: f64 },
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("invalid argument: {0}")]
    Domain(String),
}

impl ZetaError {
    /// True for errors that stem from the caller's choice of point or bracket.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            ZetaError::Pole { .. }
                | ZetaError::NoSignChange { .. }
                | ZetaError::CapExceeded { .. }
                | ZetaError::Domain(_)
                | ZetaError::Approximation { .. }
        )
    }

    pub fn is_convergence(&self) -> bool {
        matches!(self, ZetaError::Convergence { .. })
    }
}

pub type Result<T> = std::result::Result<T, ZetaError>;

pub(crate) fn check_cap(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        Err(ZetaError::CapExceeded { what, value, max })
    } else {
        Ok(())
    }
}
