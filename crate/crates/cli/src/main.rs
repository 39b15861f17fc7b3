use barnes_zeta_cli::{run_with_cache, Cli};
use clap::Parser;
use std::io::Write;
use std::process::exit;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version are not errors
            exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run_with_cache(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.body.as_bytes());
            let _ = stdout.flush();
            exit(outcome.status);
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(e.exit_code());
        }
    }
}
