//! Named consistency checks over parameter grids. Every check reports its
//! case count, failures, and worst margin (relative slack; negative means
//! violated). [`run`] drives them all.

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{corollary13_bracket, envelope, even_upper_refined, schmidt_interval, even_upper, BoundSource};
use crate::closed_forms::{
    a1, a2, a2_even_estimates, a2_odd_estimates, d2, d2_recurrence_step, q_coefficients_for, r_lambda,
    r_lambda_decomposed,
};
use crate::error::Result;
use crate::oracle::{a_matrix, jacobi_eigen, moment, oracle_via_c, rayleigh_c_squared};
use crate::real::{Ext, Field, Precision, Real};
use crate::recurrence::{build_coeffs, prod, Branch, ProblemSpec};
use crate::spectral::{
    all_eigenvalues, eigen_count_below, jacobi_matrix, markov_constant, q_sign_count, Backend, SolveOptions,
};

/// λ grid of the bound sandwich and the spectral property suites.
pub const SANDWICH_LAMBDAS: [f64; 9] = [-0.45, -0.25, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0];
/// λ grid of the backend agreement property.
pub const BACKEND_LAMBDAS: [f64; 8] = [-0.45, -0.25, 0.0, 0.5, 1.0, 2.0, 5.0, 25.0];
/// λ grid of the oracle agreement property.
pub const ORACLE_LAMBDAS: [f64; 7] = [-0.4, -0.1, 0.0, 0.5, 1.0, 2.0, 10.0];
/// λ values (as fractions) of the exact identity suite.
pub const EXACT_LAMBDAS: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (-1, 4), (7, 3)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Desk-scale grids, `n ≤ 12`.
    Quick,
    Full,
}

impl Mode {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Mode::Quick => quick,
            Mode::Full => full,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    pub mode: Mode,
    /// Factor applied to every spectral `c²` before it is compared with an
    /// independent reference. `1.0` in normal use; anything else is a
    /// negative control that must make the suite fail.
    pub perturb: f64,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions { mode: Mode::Quick, perturb: 1.0 }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub worst_margin: f64,
    /// First failing case, if any.
    pub first_failure: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<28} cases={:<6} failures={:<4} worst_margin={:<12.3e} {:.2}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.failures,
            self.worst_margin,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(case) = &self.first_failure {
            write!(f, "  first failure: {case}")?;
        }
        Ok(())
    }
}

/// Accumulates case outcomes for one check.
struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    worst: f64,
    first_failure: Option<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0, worst: f64::INFINITY, first_failure: None, start: Instant::now() }
    }

    fn record(&mut self, margin: f64, case: impl FnOnce() -> String) {
        self.cases += 1;
        self.worst = self.worst.min(margin);
        if !(margin >= 0.0) {
            self.fail(case);
        }
    }

    fn fail(&mut self, case: impl FnOnce() -> String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(case());
        }
    }

    /// Slack of `lo ≤ x ≤ hi` relative to `|x|`.
    fn between(&mut self, lo: f64, x: f64, hi: f64, case: impl FnOnce() -> String) {
        let scale = x.abs().max(f64::MIN_POSITIVE);
        self.record(((x - lo) / scale).min((hi - x) / scale), || format!("{} [{lo}, {hi}] ∌ {x}", case()));
    }

    /// Slack of `|a − b|/|b| ≤ tol`.
    fn close(&mut self, a: f64, b: f64, tol: f64, case: impl FnOnce() -> String) {
        let err = (a - b).abs() / b.abs();
        self.record(tol - err, || format!("{}: {a} vs {b} (rel {err:.2e})", case()));
    }

    fn exact(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.record(if ok { 0.0 } else { -1.0 }, case);
    }

    fn error(&mut self, err: crate::Error, case: impl FnOnce() -> String) {
        self.cases += 1;
        self.worst = self.worst.min(-1.0);
        self.fail(|| format!("{}: {err}", case()));
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            worst_margin: if self.cases == 0 { f64::NAN } else { self.worst },
            first_failure: self.first_failure,
            elapsed: self.start.elapsed(),
        }
    }
}

fn spec(n: usize, l: f64) -> ProblemSpec {
    ProblemSpec::new(n, l).expect("grid points are in the domain")
}

fn spectral_c2(s: &ProblemSpec, opts: &ValidateOptions) -> Result<f64> {
    Ok(markov_constant(s, &SolveOptions::default())?.c_squared * opts.perturb)
}

/// `c₂(0) = 4`, `c₁² = 2(λ+1)`, `c₃²(0) = 2(14+√178)`.
pub fn check_desk_values(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("desk_values");
    let mut case = |n: usize, l: f64, expected: f64, tol: f64| match spectral_c2(&spec(n, l), opts) {
        Ok(c2) => t.close(c2, expected, tol, || format!("n={n} lambda={l}")),
        Err(e) => t.error(e, || format!("n={n} lambda={l}")),
    };
    case(2, 0.0, 16.0, 1e-12);
    for l in [-0.4, 0.0, 1.0, 10.0] {
        case(1, l, 2.0 * (l + 1.0), 1e-12);
    }
    case(3, 0.0, 2.0 * (14.0 + 178f64.sqrt()), 1e-10);
    t.finish()
}

/// `c_n(1/2)` inside Schmidt's interval.
pub fn check_schmidt(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("schmidt_interval");
    for n in 2..=opts.mode.pick(12, 30) {
        match spectral_c2(&spec(n, 0.5), opts) {
            Ok(c2) => {
                let (lo, hi) = schmidt_interval(n);
                t.between(lo, c2.sqrt(), hi, || format!("n={n}"));
            }
            Err(e) => t.error(e, || format!("n={n}")),
        }
    }
    t.finish()
}

/// The Chebyshev-weight corollary: `0.472135n² ≤ c_n(0) ≤ 0.472871(n+9/8)²`,
/// `0.248549n² ≤ c_n(1) ≤ 0.250987(n+19/8)²`.
pub fn check_chebyshev_constants(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("chebyshev_corollary");
    for n in 3..=opts.mode.pick(12, 50) {
        let nf = n as f64;
        for (l, lo, hi) in [
            (0.0, 0.472135 * nf * nf, 0.472871 * (nf + 1.125).powi(2)),
            (1.0, 0.248549 * nf * nf, 0.250987 * (nf + 2.375).powi(2)),
        ] {
            match spectral_c2(&spec(n, l), opts) {
                Ok(c2) => t.between(lo, c2.sqrt(), hi, || format!("n={n} lambda={l}")),
                Err(e) => t.error(e, || format!("n={n} lambda={l}")),
            }
        }
    }
    t.finish()
}

/// Every applicable envelope row brackets the spectral `c²`.
pub fn check_bound_sandwich(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("bound_sandwich");
    for &l in &SANDWICH_LAMBDAS {
        for n in 3..=opts.mode.pick(12, 60) {
            let s = spec(n, l);
            let c2 = match spectral_c2(&s, opts) {
                Ok(v) => v,
                Err(e) => {
                    t.error(e, || format!("n={n} lambda={l}"));
                    continue;
                }
            };
            for b in envelope(&s).applicable().filter(|b| b.source.in_envelope()) {
                let lo = b.lower_c2.unwrap_or(f64::NEG_INFINITY);
                let hi = b.upper_c2.unwrap_or(f64::INFINITY);
                t.between(lo, c2, hi, || format!("{} n={n} lambda={l}", b.source));
            }
        }
    }
    t.finish()
}

/// Envelope lower ≤ upper, and the stated dominance relations between rows.
pub fn check_bound_relations(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("bound_relations");
    for &l in &SANDWICH_LAMBDAS {
        for n in 3..=opts.mode.pick(12, 60) {
            let report = envelope(&spec(n, l));
            let env = &report.envelope;
            if let (Some(lo), Some(hi)) = (env.lower_c2, env.upper_c2) {
                t.record((hi - lo) / hi, || format!("envelope n={n} lambda={l}: {lo} > {hi}"));
            }
            if n % 2 == 0 && n >= 4 {
                if l >= 2.0 {
                    let (refined, plain) = (even_upper_refined(n, l), even_upper(n, l));
                    t.record((plain - refined) / plain, || format!("Eq4_5 > Thm4_2 n={n} lambda={l}"));
                }
                let even_row = report.get(BoundSource::Thm4_2).or(report.get(BoundSource::Eq4_5));
                let uniform = report.get(BoundSource::Thm1_1).and_then(|b| b.upper_c2);
                if let (Some(u), Some(even)) = (uniform, even_row.and_then(|b| b.upper_c2)) {
                    t.record((u - even) / u, || format!("even upper > Thm1_1 upper n={n} lambda={l}"));
                }
            }
        }
    }
    t.finish()
}

/// Exact rational identities: leading `Q_m` coefficients against the closed
/// forms, positivity, telescoping and the first-order recurrence of `D₂`, and
/// the alternative form of `r_λ`.
pub fn check_exact_identities(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("exact_identities");
    let max_m = opts.mode.pick(8, 15);
    for &(p, q) in &EXACT_LAMBDAS {
        let l = BigRational::frac(p, q);
        for branch in [Branch::Even, Branch::Odd] {
            let case = |m: usize| format!("lambda={p}/{q} {} m={m}", branch.name());
            let coeffs = match q_coefficients_for(max_m, &l, branch) {
                Ok(c) => c,
                Err(e) => {
                    t.error(e, || case(max_m));
                    continue;
                }
            };
            t.exact(coeffs[0] == BigRational::one() && coeffs.iter().all(|c| *c > BigRational::zero()), || {
                format!("{}: coefficients not positive", case(max_m))
            });
            let mut prev_d2 = BigRational::zero();
            for m in 1..=max_m {
                let q = q_coefficients_for(m, &l, branch).expect("checked above");
                let (a1v, a2v) = (a1(m, &l, branch).unwrap(), a2(m, &l, branch).unwrap());
                t.exact(q[1] == a1v, || format!("{}: A1", case(m)));
                let second = q.get(2).cloned().unwrap_or_else(BigRational::zero);
                t.exact(second == a2v, || format!("{}: A2", case(m)));
                let d = d2(m, &l, branch).unwrap();
                let telescoped = a2v - a2(m - 1, &l, branch).unwrap();
                t.exact(telescoped == d, || format!("{}: A2 telescoping", case(m)));
                if m >= 2 {
                    let step = d2_recurrence_step(m, &l, branch, &prev_d2).unwrap();
                    t.exact(step == d, || format!("{}: D2 recurrence", case(m)));
                }
                prev_d2 = d;
            }
        }
    }
    let ms = [(-3, 2), (0, 1), (1, 3), (2, 1), (7, 1), (25, 4)];
    let ls = [(-2, 5), (0, 1), (1, 2), (7, 3), (10, 1)];
    for &(mp, mq) in &ms {
        for &(lp, lq) in &ls {
            let (m, l) = (BigRational::frac(mp, mq), BigRational::frac(lp, lq));
            t.exact(r_lambda(&m, &l) == r_lambda_decomposed(&m, &l), || {
                format!("r_lambda decomposition m={mp}/{mq} lambda={lp}/{lq}")
            });
        }
    }
    t.finish()
}

fn estimate_lambdas() -> Vec<f64> {
    vec![-0.49, -0.45, -0.3, -0.1, 0.0, 0.25, 0.5, 1.0, 2.0, 3.5, 7.0, 12.0, 25.0]
}

/// Two-sided estimates of the even second coefficient, `m = 2..40`.
pub fn check_even_a2_estimates(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("even_a2_estimates");
    for l in estimate_lambdas() {
        for m in 2..=opts.mode.pick(20, 40) {
            let v = a2(m, &l, Branch::Even).unwrap();
            let (lo, hi) = a2_even_estimates(m, &l);
            t.between(lo, v, hi, || format!("m={m} lambda={l}"));
        }
    }
    t.finish()
}

/// Lower (split at λ = 0) and upper estimates of the odd second coefficient.
pub fn check_odd_a2_estimates(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("odd_a2_estimates");
    for l in estimate_lambdas() {
        for m in 2..=opts.mode.pick(20, 40) {
            let v = a2(m, &l, Branch::Odd).unwrap();
            let (lo, hi) = a2_odd_estimates(m, &l);
            t.between(lo, v, hi, || format!("m={m} lambda={l}"));
        }
    }
    t.finish()
}

/// Spectral value, moment-Gram Rayleigh maximum (128-bit) and the `C_m C_mᵀ`
/// eigenvalue agree to 1e-9; the maximizer has the parity of `n`.
pub fn check_oracle_agreement(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("oracle_agreement");
    for &l in &ORACLE_LAMBDAS {
        for n in 1..=opts.mode.pick(8, 12) {
            let s = spec(n, l);
            let case = || format!("n={n} lambda={l}");
            let (c2, gram, via_c) = match (spectral_c2(&s, opts), rayleigh_c_squared::<Ext>(&s), oracle_via_c(&s)) {
                (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                    t.error(e, case);
                    continue;
                }
            };
            let g = gram.value.to_f64();
            t.close(c2, g, 1e-9, || format!("{} spectral vs gram", case()));
            t.close(via_c, g, 1e-9, || format!("{} C-matrix vs gram", case()));
            let norm = gram.vector.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max);
            let stray = gram
                .vector
                .iter()
                .enumerate()
                .filter(|(i, _)| (i + n) % 2 == 1)
                .map(|(_, v)| v.to_f64().abs())
                .fold(0.0, f64::max);
            t.record(1e-7 - stray / norm, || format!("{} parity leak {stray:e}", case()));
        }
    }
    t.finish()
}

/// Moment ratios and `det(C_m C_mᵀ) = ∏ prod_k`.
pub fn check_oracle_identities(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("oracle_identities");
    for &l in &ORACLE_LAMBDAS {
        for j in 0..30 {
            match (moment(j, l), moment(j + 1, l)) {
                (Ok(a), Ok(b)) => {
                    let expected = (j as f64 + 0.5) / (j as f64 + l + 1.0);
                    t.close(b / a, expected, 1e-13, || format!("moment ratio j={j} lambda={l}"));
                }
                (Err(e), _) | (_, Err(e)) => t.error(e, || format!("moment j={j} lambda={l}")),
            }
        }
        for n in 1..=opts.mode.pick(8, 12) {
            let s = spec(n, l);
            let det = a_matrix(&s).and_then(|a| jacobi_eigen(&a, f64::EPSILON)).map(|e| e.values.iter().product::<f64>());
            match det {
                Ok(det) => {
                    let expected: f64 = (1..=s.m()).map(|k| prod(k, &l, s.branch()).unwrap()).product();
                    t.close(det, expected, 1e-9, || format!("det n={n} lambda={l}"));
                }
                Err(e) => t.error(e, || format!("det n={n} lambda={l}")),
            }
        }
    }
    t.finish()
}

/// `(2λ+1)c_n²(λ)` at `λ = −1/2 + eps`, next to its limit bracket.
#[derive(Clone, Debug)]
pub struct LimitProbe {
    pub n: usize,
    pub eps: f64,
    pub lambda: f64,
    pub value: f64,
    pub bracket: (f64, f64),
}

impl LimitProbe {
    /// Membership in the bracket widened by the relative `slack`.
    pub fn within(&self, slack: f64) -> bool {
        self.bracket.0 * (1.0 - slack) <= self.value && self.value <= self.bracket.1 * (1.0 + slack)
    }
}

/// Computes the probe in extended precision; `n ≥ 3`, `0 < eps ≤ 1e-3`.
pub fn limit_probe(n: usize, eps: f64) -> Result<LimitProbe> {
    if n < 3 {
        return Err(crate::Error::DegreeOutOfDomain(n));
    }
    if !(eps > 0.0 && eps <= 1e-3) {
        return Err(crate::Error::Domain(format!("eps must lie in (0, 1e-3], got {eps}")));
    }
    let lambda = -0.5 + eps;
    let r = markov_constant(
        &ProblemSpec::new(n, lambda)?,
        &SolveOptions { precision: Precision::Extended, ..Default::default() },
    )?;
    Ok(LimitProbe { n, eps, lambda, value: (2.0 * lambda + 1.0) * r.c_squared, bracket: corollary13_bracket(n) })
}

pub fn check_limit_probe(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("limit_probe");
    for n in 3..=opts.mode.pick(6, 10) {
        match limit_probe(n, 1e-8) {
            Ok(p) => {
                let v = p.value * opts.perturb;
                let (lo, hi) = (p.bracket.0 * (1.0 - 1e-3), p.bracket.1 * (1.0 + 1e-3));
                t.between(lo, v, hi, || format!("n={n}"));
            }
            Err(e) => t.error(e, || format!("n={n}")),
        }
    }
    t.finish()
}

pub fn check_backend_agreement(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("backend_agreement");
    for &l in &BACKEND_LAMBDAS {
        for n in 1..=opts.mode.pick(12, 60) {
            let s = spec(n, l);
            let a = markov_constant(&s, &SolveOptions::default());
            let b = markov_constant(&s, &SolveOptions { backend: Backend::QSignBisect, ..Default::default() });
            match (a, b) {
                (Ok(a), Ok(b)) => t.close(b.mu1, a.mu1, 1e-11, || format!("n={n} lambda={l}")),
                (Err(e), _) | (_, Err(e)) => t.error(e, || format!("n={n} lambda={l}")),
            }
        }
    }
    t.finish()
}

/// No eigenvalue of `B_m` at or below zero.
pub fn check_positive_definite(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("positive_definite");
    for &l in &SANDWICH_LAMBDAS {
        for n in 1..=opts.mode.pick(12, 60) {
            match build_coeffs::<f64>(&spec(n, l)) {
                Ok(c) => {
                    let count = eigen_count_below(&jacobi_matrix(&c), &0.0);
                    t.exact(count == 0, || format!("n={n} lambda={l}: {count} eigenvalues below 0"));
                }
                Err(e) => t.error(e, || format!("n={n} lambda={l}")),
            }
        }
    }
    t.finish()
}

/// `c_n ≤ c_{n+2}` within each parity.
pub fn check_interlacing(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("interlacing_monotonicity");
    let top = opts.mode.pick(12, 60);
    for &l in &SANDWICH_LAMBDAS {
        let values: Vec<Result<f64>> = (1..=top).map(|n| spectral_c2(&spec(n, l), opts)).collect();
        for n in 1..=top - 2 {
            match (&values[n - 1], &values[n + 1]) {
                (Ok(a), Ok(b)) => t.record((b - a) / b, || format!("n={n} lambda={l}: {a} > {b}")),
                (Err(e), _) | (_, Err(e)) => t.error(e.clone(), || format!("n={n} lambda={l}")),
            }
        }
    }
    t.finish()
}

/// `Σ 1/μ_i` over the full spectrum equals the first coefficient.
pub fn check_trace_identity(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("trace_identity");
    for &l in &SANDWICH_LAMBDAS {
        for n in 1..=opts.mode.pick(12, 24) {
            let s = spec(n, l);
            let sum = build_coeffs::<f64>(&s)
                .and_then(|c| all_eigenvalues(&jacobi_matrix(&c), 1e-14))
                .map(|ev| ev.iter().map(|mu| 1.0 / mu).sum::<f64>());
            match sum {
                Ok(sum) => {
                    let expected = a1(s.m(), &l, s.branch()).unwrap();
                    t.close(sum, expected, 1e-9, || format!("n={n} lambda={l}"));
                }
                Err(e) => t.error(e, || format!("n={n} lambda={l}")),
            }
        }
    }
    t.finish()
}

/// Sign changes of the `Q` sequence count the eigenvalues below random `μ`.
pub fn check_q_zero_count(opts: &ValidateOptions) -> CheckReport {
    let mut t = Tally::new("q_zero_count");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for &l in &SANDWICH_LAMBDAS {
        for n in 1..=opts.mode.pick(12, 60) {
            let coeffs = match build_coeffs::<f64>(&spec(n, l)) {
                Ok(c) => c,
                Err(e) => {
                    t.error(e, || format!("n={n} lambda={l}"));
                    continue;
                }
            };
            let matrix = jacobi_matrix(&coeffs);
            let (lo, hi) = ((1.0 / coeffs.prod(coeffs.m())).ln() - 10.0, (2.0 * matrix.gershgorin_upper()).ln());
            for _ in 0..100 {
                let mu: f64 = rng.gen_range(lo..hi).exp();
                let (a, b) = (q_sign_count(&coeffs, &mu), eigen_count_below(&matrix, &mu));
                t.exact(a == b, || format!("n={n} lambda={l} mu={mu}: {a} vs {b}"));
            }
        }
    }
    t.finish()
}

pub type Check = fn(&ValidateOptions) -> CheckReport;

/// Every check, in report order.
pub const CHECKS: [(&str, Check); 16] = [
    ("desk_values", check_desk_values),
    ("schmidt_interval", check_schmidt),
    ("chebyshev_corollary", check_chebyshev_constants),
    ("bound_sandwich", check_bound_sandwich),
    ("bound_relations", check_bound_relations),
    ("exact_identities", check_exact_identities),
    ("even_a2_estimates", check_even_a2_estimates),
    ("odd_a2_estimates", check_odd_a2_estimates),
    ("oracle_agreement", check_oracle_agreement),
    ("oracle_identities", check_oracle_identities),
    ("limit_probe", check_limit_probe),
    ("backend_agreement", check_backend_agreement),
    ("positive_definite", check_positive_definite),
    ("interlacing_monotonicity", check_interlacing),
    ("trace_identity", check_trace_identity),
    ("q_zero_count", check_q_zero_count),
];

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub mode: Mode,
    pub checks: Vec<CheckReport>,
    pub elapsed: Duration,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(
            f,
            "{} checks, {} failed, mode={}, {:.2}s",
            self.checks.len(),
            failed,
            match self.mode {
                Mode::Quick => "quick",
                Mode::Full => "full",
            },
            self.elapsed.as_secs_f64()
        )
    }
}

pub fn run(opts: &ValidateOptions) -> ValidationReport {
    let start = Instant::now();
    let checks = CHECKS.iter().map(|(_, check)| check(opts)).collect();
    ValidationReport { mode: opts.mode, checks, elapsed: start.elapsed() }
}
