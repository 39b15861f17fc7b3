use barnes_zeta::multigamma::DEFAULT_MAX_TAIL;
use barnes_zeta::reduction::DEFAULT_MAX_DEN;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug, Clone)]
#[command(name = "barnes-zeta", version, about = "Barnes multiple zeta functions with rational periods")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Target tolerance
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Largest denominator used when rationalizing decimal input
    #[arg(long = "max-den", global = true, default_value_t = DEFAULT_MAX_DEN)]
    pub max_den: u64,
    /// Euler–Maclaurin direct-sum length
    #[arg(long = "em-terms", global = true, default_value_t = 40)]
    pub em_terms: usize,
    /// Number of Euler–Maclaurin Bernoulli terms
    #[arg(long = "em-order", global = true, default_value_t = 15)]
    pub em_order: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// zeta_2(s, x | w) over (s, x)
    #[value(name = "zeta2_surface")]
    Zeta2Surface,
    /// zeta_2(0, x | w1, w2) over (w1, w2)
    #[value(name = "zeta2_at0")]
    Zeta2At0,
    /// zeta_2'(0, x | w1, w2) over (w1, w2)
    #[value(name = "zeta2_deriv_at0")]
    Zeta2DerivAt0,
    /// zeta_3(s, x | w) over (s, x)
    #[value(name = "zeta3_surface")]
    Zeta3Surface,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Number of periods
    #[arg(short = 'N', default_value_t = 1)]
    pub n: usize,
    /// Shift x: a/b, a decimal, or (for reduce) "sym"
    #[arg(short = 'x', default_value = "1")]
    pub x: String,
    /// Comma-separated periods, e.g. 1,1/2
    #[arg(short = 'w')]
    pub w: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print the Hurwitz decomposition of zeta_N(s, x | w)
    Reduce {
        #[command(flatten)]
        target: Target,
    },
    /// Evaluate zeta_N(s, x | w)
    Eval {
        #[command(flatten)]
        target: Target,
        /// Real or complex argument, e.g. 0.5 or 0.5+14.1i
        #[arg(short = 's', allow_hyphen_values = true)]
        s: String,
    },
    /// n-th s-derivative of zeta_N at s = -l
    Deriv {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'n', default_value_t = 0)]
        order: usize,
        #[arg(short = 'l', default_value_t = 0)]
        ell: usize,
    },
    /// Real zero of zeta_N(s, x | w) inside a bracket
    FindZero {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        hi: f64,
    },
    /// Grid data for surfaces and period plots
    Grid {
        #[arg(long, value_enum)]
        kind: GridKind,
        /// Shift for the period grids
        #[arg(short = 'x', default_value = "1/10")]
        x: String,
        /// Periods for the surfaces (default 1,1/2 or 1,1/2,1/3)
        #[arg(short = 'w')]
        w: Option<String>,
        #[arg(long = "s-range", default_value = "-2,1", allow_hyphen_values = true)]
        s_range: String,
        #[arg(long = "x-range", default_value = "0,1")]
        x_range: String,
        #[arg(long = "w1-range", default_value = "0,1")]
        w1_range: String,
        #[arg(long = "w2-range", default_value = "0,1")]
        w2_range: String,
        /// Nodes per axis: "n" or "n1,n2"
        #[arg(long, default_value = "25")]
        steps: String,
    },
    /// Compare both sides of the Kummer-type expansion of the multiple gamma functions
    KummerCheck {
        #[arg(short = 'N', default_value_t = 2)]
        n: usize,
        #[arg(short = 'x', default_value = "1/2")]
        x: String,
        /// Fourier terms
        #[arg(long, default_value_t = 1_000_000)]
        terms: usize,
        /// Largest acceptable tail bound
        #[arg(long = "max-tail", default_value_t = DEFAULT_MAX_TAIL)]
        max_tail: f64,
        /// Allow the conditionally convergent N = 1 series
        #[arg(long = "allow-n1")]
        allow_n1: bool,
    },
    /// Generalized Stieltjes constants gamma_0(x)..gamma_n(x)
    Stieltjes {
        #[arg(short = 'n', default_value_t = 0)]
        n_max: usize,
        #[arg(short = 'x', default_value = "1")]
        x: String,
    },
}
