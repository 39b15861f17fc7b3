//! Command-line front end for `barnes-zeta`: argument parsing, the
//! subcommands, and rendering of their results as text, CSV or JSON.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod parse;
pub mod zero;

pub use args::{Cli, Command, Format};
pub use commands::{run, run_with_cache, CACHE_ENV, CACHE_FILE};
pub use error::CliError;
pub use zero::{find_barnes_zero, find_zero, ZeroReport};
