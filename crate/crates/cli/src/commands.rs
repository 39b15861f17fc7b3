use crate::args::{Cli, Command, ConfigArgs, Format, GridKind, Target};
use crate::error::CliError;
use crate::output::{Cell, Report, Table};
use crate::parse::{parse_complex, parse_periods, parse_range, parse_rational, parse_shift, parse_steps, Shift};
use crate::zero::find_barnes_zero;
use barnes_zeta::context::EvalContext;
use barnes_zeta::exact::{barnes_value_nonpos, format_rational, to_f64, BigRational, PeriodVector};
use barnes_zeta::hurwitz::stieltjes_all;
use barnes_zeta::multigamma::kummer_check;
use barnes_zeta::reduction::{decompose, decompose_symbolic};
use barnes_zeta::special_values::{barnes_deriv_nonpos, barnes_zeta0_grid, GRID_MAX_DEN};
use barnes_zeta::ZetaError;
use num_complex::Complex64;
use std::path::PathBuf;

/// Directory holding the persisted Stieltjes cache.
pub const CACHE_ENV: &str = "BARNES_ZETA_CACHE_DIR";
pub const CACHE_FILE: &str = "stieltjes.bzcache";

/// Rendered output and the exit status to report.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub status: i32,
}

pub fn context(config: &ConfigArgs) -> Result<EvalContext, CliError> {
    let mut ctx = EvalContext::default();
    ctx.em_terms = config.em_terms;
    ctx.em_order = config.em_order;
    ctx.target_tol = config.tol;
    ctx.validate()?;
    Ok(ctx)
}

fn periods(target: &Target, max_den: u64) -> Result<PeriodVector, CliError> {
    match &target.w {
        Some(w) => parse_periods(w, max_den),
        None => Ok(PeriodVector::ones(target.n)),
    }
}

fn rational_x(text: &str, max_den: u64) -> Result<BigRational, CliError> {
    match parse_shift(text, max_den)? {
        Shift::Value(x) => Ok(x),
        Shift::Symbolic => Err(CliError::Usage("a symbolic x is only accepted by reduce".into())),
    }
}

fn reduce(target: &Target, max_den: u64) -> Result<Report, CliError> {
    let w = periods(target, max_den)?;
    match parse_shift(&target.x, max_den)? {
        Shift::Symbolic => {
            let d = decompose_symbolic(target.n, &w)?;
            let rows = d
                .terms
                .iter()
                .map(|t| {
                    vec![
                        Cell::Int(t.k as i64),
                        Cell::Text(format_rational(&t.shift)),
                        Cell::Text(t.coeff.display_in("x")),
                    ]
                })
                .collect();
            Ok(Report::Raw {
                text: d.to_string(),
                json: serde_json::to_value(&d).map_err(|e| CliError::Io(e.to_string()))?,
                csv: Table::rows(vec!["k", "shift", "coeff"], rows),
            })
        }
        Shift::Value(x) => {
            let d = decompose(target.n, &x, &w)?;
            let rows = d
                .terms
                .iter()
                .map(|t| {
                    vec![
                        Cell::Int(t.k as i64),
                        Cell::Text(format_rational(&t.y)),
                        Cell::Text(format_rational(&t.coeff)),
                    ]
                })
                .collect();
            Ok(Report::Raw {
                text: d.to_string(),
                json: serde_json::to_value(&d).map_err(|e| CliError::Io(e.to_string()))?,
                csv: Table::rows(vec!["k", "y", "coeff"], rows),
            })
        }
    }
}

fn surface(n: usize, w: &PeriodVector, s_range: (f64, f64), x_range: (f64, f64), steps: (usize, usize), ctx: &EvalContext) -> Result<Report, CliError> {
    if x_range.0 < 0.0 {
        return Err(ZetaError::Domain("x range must lie in [0, inf)".into()).into());
    }
    let d = decompose_symbolic(n, w)?;
    let midpoints = |(lo, hi): (f64, f64), k: usize| -> Vec<f64> {
        (0..k).map(|i| lo + (i as f64 + 0.5) * (hi - lo) / k as f64).collect()
    };
    let mut rows = Vec::with_capacity(steps.0 * steps.1);
    for s in midpoints(s_range, steps.0) {
        for x in midpoints(x_range, steps.1) {
            let v = d.at_real(x, w.clone()).eval(Complex64::new(s, 0.0), ctx)?;
            rows.push(vec![Cell::Float(s), Cell::Float(x), Cell::Float(v.re)]);
        }
    }
    Ok(Report::Table(Table::rows(vec!["s", "x", "value"], rows)))
}

#[allow(clippy::too_many_arguments)]
fn grid(
    kind: GridKind,
    x: &str,
    w: &Option<String>,
    ranges: [&str; 4],
    steps: &str,
    max_den: u64,
    ctx: &EvalContext,
) -> Result<Report, CliError> {
    let steps = parse_steps(steps)?;
    let [s_range, x_range, w1_range, w2_range] = ranges;
    match kind {
        GridKind::Zeta2Surface | GridKind::Zeta3Surface => {
            let (n, default) = if kind == GridKind::Zeta2Surface { (2, "1,1/2") } else { (3, "1,1/2,1/3") };
            let w = parse_periods(w.as_deref().unwrap_or(default), max_den)?;
            surface(n, &w, parse_range(s_range)?, parse_range(x_range)?, steps, ctx)
        }
        GridKind::Zeta2At0 | GridKind::Zeta2DerivAt0 => {
            let order = usize::from(kind == GridKind::Zeta2DerivAt0);
            let x = rational_x(x, max_den)?;
            let g = barnes_zeta0_grid(order, &x, parse_range(w1_range)?, parse_range(w2_range)?, steps, GRID_MAX_DEN, ctx)?;
            let rows = g
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(Cell::Float).collect())
                .collect();
            Ok(Report::Table(Table::rows(vec!["w1", "w2", "value"], rows)))
        }
    }
}

fn execute(cli: &Cli, ctx: &EvalContext) -> Result<(Report, i32), CliError> {
    let max_den = cli.config.max_den;
    let tol = cli.config.tol;
    let report = match &cli.command {
        Command::Reduce { target } => reduce(target, max_den)?,
        Command::Eval { target, s } => {
            let s = parse_complex(s)?;
            let x = rational_x(&target.x, max_den)?;
            let d = decompose(target.n, &x, &periods(target, max_den)?)?;
            let (v, err) = d.eval_with_error(s, ctx)?;
            Report::Table(Table::record(vec![
                ("re", Cell::Float(v.re)),
                ("im", Cell::Float(v.im)),
                ("error_estimate", Cell::Float(err)),
            ]))
        }
        Command::Deriv { target, order, ell } => {
            let x = rational_x(&target.x, max_den)?;
            let w = periods(target, max_den)?;
            let value = barnes_deriv_nonpos(*order, *ell, target.n, &x, &w, ctx)?;
            let mut fields = vec![("value", Cell::Float(value))];
            if *order == 0 {
                let exact = barnes_value_nonpos(*ell, &x, &w);
                fields.push(("exact", Cell::Text(format_rational(&exact))));
                fields.push(("exact_float", Cell::Float(to_f64(&exact))));
            }
            Report::Table(Table::record(fields))
        }
        Command::FindZero { target, lo, hi } => {
            let x = rational_x(&target.x, max_den)?;
            let r = find_barnes_zero(target.n, &x, &periods(target, max_den)?, *lo, *hi, ctx)?;
            Report::Table(Table::record(vec![
                ("s_root", Cell::Float(r.s_root)),
                ("residual", Cell::Float(r.residual)),
                ("bracket_lo", Cell::Float(r.bracket.0)),
                ("bracket_hi", Cell::Float(r.bracket.1)),
                ("iterations", Cell::Int(r.iterations as i64)),
            ]))
        }
        Command::Grid {
            kind,
            x,
            w,
            s_range,
            x_range,
            w1_range,
            w2_range,
            steps,
        } => grid(*kind, x, w, [s_range, x_range, w1_range, w2_range], steps, max_den, ctx)?,
        Command::KummerCheck {
            n,
            x,
            terms,
            max_tail,
            allow_n1,
        } => {
            if *n == 1 && !allow_n1 {
                return Err(CliError::Usage("N = 1 converges only conditionally; pass --allow-n1".into()));
            }
            let x = to_f64(&parse_rational(x, max_den)?);
            let c = kummer_check(*n, x, *terms, *max_tail, ctx)?;
            let pass = c.passes(tol);
            let report = Report::Table(Table::record(vec![
                ("lhs", Cell::Float(c.lhs)),
                ("rhs", Cell::Float(c.rhs)),
                ("tail_bound", Cell::Float(c.tail_bound)),
                ("diff", Cell::Float(c.diff)),
                ("pass", Cell::Bool(pass)),
            ]));
            return Ok((report, if pass { 0 } else { 3 }));
        }
        Command::Stieltjes { n_max, x } => {
            let x = rational_x(x, max_den)?;
            let values = stieltjes_all(*n_max, &x, ctx)?;
            let rows = values
                .into_iter()
                .enumerate()
                .map(|(n, v)| vec![Cell::Int(n as i64), Cell::Float(v)])
                .collect();
            Report::Table(Table::rows(vec!["n", "value"], rows))
        }
    };
    Ok((report, 0))
}

fn default_format(command: &Command) -> Format {
    match command {
        Command::Grid { .. } => Format::Csv,
        _ => Format::Text,
    }
}

/// Runs one command against `ctx`. With `--out` the rendered result goes to
/// the file and the returned body is empty.
pub fn run(cli: &Cli, ctx: &EvalContext) -> Result<Outcome, CliError> {
    let (report, status) = execute(cli, ctx)?;
    let body = report.render(cli.config.format.unwrap_or_else(|| default_format(&cli.command)))?;
    match &cli.config.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome {
                body: String::new(),
                status,
            })
        }
        None => Ok(Outcome { body, status }),
    }
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join(CACHE_FILE))
}

/// [`run`] with the Stieltjes cache loaded from and saved to
/// `$BARNES_ZETA_CACHE_DIR` when that variable is set. An unreadable cache
/// is reported on stderr and replaced.
pub fn run_with_cache(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = context(&cli.config)?;
    let path = cache_path();
    if let Some(p) = &path {
        if let Err(e) = ctx.load_stieltjes_cache(p) {
            eprintln!("warning: ignoring cache {}: {e}", p.display());
        }
    }
    let outcome = run(cli, &ctx)?;
    if let Some(p) = &path {
        if ctx.stieltjes_cache_len() > 0 {
            if let Some(dir) = p.parent() {
                std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
            }
            ctx.save_stieltjes_cache(p)?;
        }
    }
    Ok(outcome)
}
