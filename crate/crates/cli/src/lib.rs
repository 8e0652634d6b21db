//! Command implementations behind the `markov` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod render;
pub mod sweep;

use std::fs;
use std::io::{self, Write};

use markov_core::validate::{self, limit_probe, Mode, ValidateOptions};
use markov_core::{envelope, markov_constant, ProblemSpec, SolveOptions};

use crate::args::{BoundsArgs, Cli, Command, ComputeArgs, Format, LimitArgs, SolverArgs, SweepArgs, ValidateArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] markov_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 2 for usage and domain errors, 1 for numerical and I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_domain() => 2,
            _ => 1,
        }
    }
}

/// Process exit status of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// The command ran but found a failing case.
    Failed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Failed => 1,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a, out),
        Command::Bounds(a) => bounds(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Validate(a) => validate(a, out),
        Command::Limit(a) => limit(a, out),
    }
}

fn solve_options(s: &SolverArgs) -> Result<SolveOptions, CliError> {
    if let Some(t) = s.rel_tol {
        if !(t > 0.0 && t < 1.0) {
            return Err(CliError::Usage(format!("--rel-tol must lie in (0, 1), got {t}")));
        }
    }
    Ok(SolveOptions { rel_tol: s.rel_tol, precision: s.precision, backend: s.backend })
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let spec = ProblemSpec::new(a.n, a.lambda)?;
    let result = markov_constant(&spec, &solve_options(&a.solver)?)?;
    let report = envelope(&spec);
    match a.format {
        Format::Text => write!(out, "{}", render::result_text(&result, &report))?,
        Format::Json => writeln!(out, "{}", render::result_json(&result, &report))?,
        Format::Csv => {
            let row = sweep::SweepRow {
                n: a.n,
                lambda: a.lambda,
                outcome: Ok(sweep::RowValues {
                    c: result.c,
                    c_squared: result.c_squared,
                    lower_best: report.envelope.lower_c2,
                    upper_best: report.envelope.upper_c2,
                    lower_source: report.envelope.lower_source,
                    upper_source: report.envelope.upper_source,
                }),
            };
            write!(out, "{}", sweep::to_csv(&[row]))?;
        }
    }
    Ok(Status::Success)
}

fn bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let spec = ProblemSpec::new(a.n, a.lambda)?;
    let report = envelope(&spec);
    match a.format {
        Format::Json => writeln!(out, "{}", render::bounds_json(&report))?,
        Format::Text => write!(out, "{}", render::bounds_text(&report))?,
        Format::Csv => {
            writeln!(out, "source,lower_c2,upper_c2,applicable")?;
            let opt = |x: Option<f64>| x.map_or(String::new(), render::fmt_real);
            for b in &report.bounds {
                writeln!(out, "{},{},{},{}", b.source.label(), opt(b.lower_c2), opt(b.upper_c2), b.applicable)?;
            }
        }
    }
    Ok(if report.envelope.is_consistent() { Status::Success } else { Status::Failed })
}

fn sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let ns = match (a.n, a.n_range) {
        (Some(n), _) => vec![n],
        (None, Some(r)) => r.values(),
        (None, None) => return Err(CliError::Usage("sweep needs -n or --n-range".into())),
    };
    let lambdas = match &a.lambda_range {
        Some(r) => r.values(),
        None if !a.lambda.is_empty() => a.lambda.clone(),
        None => return Err(CliError::Usage("sweep needs --lambda or --lambda-range".into())),
    };
    // Reject the whole request up front if any grid point is outside the domain.
    for &n in &ns {
        for &l in &lambdas {
            ProblemSpec::new(n, l)?;
        }
    }
    let workers = match a.workers {
        Some(0) => return Err(CliError::Usage("--workers must be positive".into())),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |p| p.get()),
    };
    let rows = sweep::run_sweep(&ns, &lambdas, &solve_options(&a.solver)?, workers);
    let text = match a.format {
        Format::Json => format!("{}\n", sweep::to_json(&rows)),
        Format::Csv | Format::Text => sweep::to_csv(&rows),
    };
    match &a.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(if rows.iter().all(|r| r.outcome.is_ok()) { Status::Success } else { Status::Failed })
}

fn validate(a: &ValidateArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let mode = if a.full { Mode::Full } else { Mode::Quick };
    if !(a.perturb.is_finite() && a.perturb > 0.0) {
        return Err(CliError::Usage(format!("--perturb must be a positive factor, got {}", a.perturb)));
    }
    let report = validate::run(&ValidateOptions { mode, perturb: a.perturb });
    writeln!(out, "{report}")?;
    Ok(if report.passed() { Status::Success } else { Status::Failed })
}

fn limit(a: &LimitArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let probe = limit_probe(a.n, a.eps)?;
    let inside = probe.within(1e-3);
    match a.format {
        Format::Json => writeln!(out, "{}", render::limit_json(&probe, inside))?,
        Format::Text | Format::Csv => write!(out, "{}", render::limit_text(&probe, inside))?,
    }
    Ok(if inside { Status::Success } else { Status::Failed })
}
