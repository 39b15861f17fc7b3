use barnes_zeta::ZetaError;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Zeta(ZetaError),
    Io(String),
}

impl CliError {
    /// 1 usage, 2 domain (pole, bracket, caps, bad input), 3 convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Zeta(e) if e.is_convergence() => 3,
            CliError::Zeta(ZetaError::Overflow(_) | ZetaError::Internal(_)) => 3,
            CliError::Zeta(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Zeta(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        CliError::Zeta(e)
    }
}
