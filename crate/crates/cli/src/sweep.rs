use rayon::prelude::*;
use serde_json::{json, Value};

use markov_core::{envelope, markov_constant, BoundSource, ProblemSpec, SolveOptions};

use crate::render::{fmt_lambda, fmt_real, real};

pub const CSV_HEADER: &str = "n,lambda,c,c_squared,lower_best,upper_best,lower_source,upper_source";

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: usize,
    pub lambda: f64,
    pub outcome: Result<RowValues, String>,
}

#[derive(Clone, Debug)]
pub struct RowValues {
    pub c: f64,
    pub c_squared: f64,
    pub lower_best: Option<f64>,
    pub upper_best: Option<f64>,
    pub lower_source: Option<BoundSource>,
    pub upper_source: Option<BoundSource>,
}

fn evaluate(n: usize, lambda: f64, opts: &SolveOptions) -> Result<RowValues, String> {
    let spec = ProblemSpec::new(n, lambda).map_err(|e| e.to_string())?;
    let r = markov_constant(&spec, opts).map_err(|e| e.to_string())?;
    let env = envelope(&spec).envelope;
    Ok(RowValues {
        c: r.c,
        c_squared: r.c_squared,
        lower_best: env.lower_c2,
        upper_best: env.upper_c2,
        lower_source: env.lower_source,
        upper_source: env.upper_source,
    })
}

/// Evaluates the grid on `workers` threads; rows come back ordered by
/// `(n, λ)` ascending whatever the schedule.
pub fn run_sweep(ns: &[usize], lambdas: &[f64], opts: &SolveOptions, workers: usize) -> Vec<SweepRow> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut lambdas = lambdas.to_vec();
    lambdas.sort_by(f64::total_cmp);
    lambdas.dedup();
    let grid: Vec<(usize, f64)> = ns.iter().flat_map(|&n| lambdas.iter().map(move |&l| (n, l))).collect();

    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    pool.install(|| {
        grid.par_iter()
            .map(|&(n, lambda)| SweepRow { n, lambda, outcome: evaluate(n, lambda, opts) })
            .collect()
    })
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let with_errors = rows.iter().any(|r| r.outcome.is_err());
    let mut out = String::from(CSV_HEADER);
    if with_errors {
        out += ",error";
    }
    out.push('\n');
    let opt = |x: Option<f64>| x.map_or(String::new(), fmt_real);
    let src = |s: Option<BoundSource>| s.map_or("", BoundSource::label);
    for row in rows {
        match &row.outcome {
            Ok(v) => {
                out += &format!(
                    "{},{},{},{},{},{},{},{}",
                    row.n,
                    fmt_lambda(row.lambda),
                    fmt_real(v.c),
                    fmt_real(v.c_squared),
                    opt(v.lower_best),
                    opt(v.upper_best),
                    src(v.lower_source),
                    src(v.upper_source)
                );
                if with_errors {
                    out.push(',');
                }
            }
            Err(e) => {
                out += &format!("{},{},,,,,,,\"{}\"", row.n, fmt_lambda(row.lambda), e.replace('"', "'"));
            }
        }
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[SweepRow]) -> Value {
    let opt = |x: Option<f64>| x.map_or(Value::Null, real);
    let src = |s: Option<BoundSource>| s.map_or(Value::Null, |s| Value::String(s.label().into()));
    Value::Array(
        rows.iter()
            .map(|row| {
                let lambda: Value = serde_json::from_str(&fmt_lambda(row.lambda)).unwrap_or(Value::Null);
                match &row.outcome {
                    Ok(v) => json!({
                        "n": row.n,
                        "lambda": lambda,
                        "c": real(v.c),
                        "c_squared": real(v.c_squared),
                        "lower_best": opt(v.lower_best),
                        "upper_best": opt(v.upper_best),
                        "lower_source": src(v.lower_source),
                        "upper_source": src(v.upper_source),
                    }),
                    Err(e) => json!({ "n": row.n, "lambda": lambda, "error": e }),
                }
            })
            .collect(),
    )
}
