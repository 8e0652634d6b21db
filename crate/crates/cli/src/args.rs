use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use markov_core::{Backend, Precision};

#[derive(Parser, Debug)]
#[command(name = "markov", version, about = "Sharp L2 Markov constants for the Gegenbauer weight")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute c_n(lambda) by bisection on the Jacobi matrix.
    Compute(ComputeArgs),
    /// List every two-sided estimate on c_n(lambda)^2 and their envelope.
    Bounds(BoundsArgs),
    /// Tabulate c_n(lambda) over a grid of (n, lambda).
    Sweep(SweepArgs),
    /// Run the consistency suite.
    Validate(ValidateArgs),
    /// Probe (2 lambda + 1) c_n^2 as lambda approaches -1/2.
    Limit(LimitArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct SolverArgs {
    /// Relative bracket width at which bisection stops.
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// double, extended or auto.
    #[arg(long, env = "MARKOV_PRECISION", default_value = "auto", value_parser = Precision::from_str)]
    pub precision: Precision,
    /// inertia or qsign.
    #[arg(long, default_value = "inertia", value_parser = Backend::from_str)]
    pub backend: Backend,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Single degree (alternative to --n-range).
    #[arg(short = 'n', long = "n", conflicts_with = "n_range")]
    pub n: Option<usize>,
    /// Degrees A:B or A:B:S, inclusive.
    #[arg(long, value_parser = parse_n_range)]
    pub n_range: Option<NRange>,
    /// Comma-separated lambda values.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', conflicts_with = "lambda_range")]
    pub lambda: Vec<f64>,
    /// Lambda values A:B:S, inclusive.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda_range)]
    pub lambda_range: Option<LambdaRange>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write the table here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Desk-scale grids (default).
    #[arg(long, conflicts_with = "full")]
    pub quick: bool,
    /// Full grids.
    #[arg(long)]
    pub full: bool,
    /// Multiply every spectral c^2 by this factor before comparison.
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub perturb: f64,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    /// Distance of lambda from -1/2.
    #[arg(long, default_value_t = 1e-8)]
    pub eps: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
    pub step: usize,
}

impl NRange {
    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.end).step_by(self.step).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaRange {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl LambdaRange {
    /// `start + i·step` up to `end`, with `end` included when it is hit to
    /// within rounding.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count).map(|i| self.start + i as f64 * self.step).collect()
    }
}

pub fn parse_n_range(s: &str) -> Result<NRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<usize>().map_err(|e| format!("bad integer `{p}`: {e}"));
    let (start, end, step) = match parts.as_slice() {
        [a, b] => (num(a)?, num(b)?, 1),
        [a, b, c] => (num(a)?, num(b)?, num(c)?),
        _ => return Err(format!("expected A:B or A:B:S, got `{s}`")),
    };
    if step == 0 || start > end {
        return Err(format!("empty range `{s}`"));
    }
    Ok(NRange { start, end, step })
}

pub fn parse_lambda_range(s: &str) -> Result<LambdaRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("bad number `{p}`: {e}"));
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected A:B:S, got `{s}`"));
    };
    let (start, end, step) = (num(a)?, num(b)?, num(c)?);
    if !(step > 0.0) || !(start <= end) || !start.is_finite() || !end.is_finite() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(LambdaRange { start, end, step })
}
