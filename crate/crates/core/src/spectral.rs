//! Jacobi matrix `B_m = A_m^{-1}`, its inertia counts, the renormalized
//! characteristic polynomials `Q_k`, and the bisection for the smallest
//! eigenvalue `μ₁`, which gives `c_n(λ) = 2/√μ₁`.

use crate::bounds;
use crate::error::{Error, Result};
use crate::real::{Ext, Field, Precision, Real};
use crate::recurrence::{build_coeffs, ProblemSpec, RecurrenceCoeffs};

/// Symmetric tridiagonal matrix, entries addressed 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalMatrix<R> {
    diag: Vec<R>,
    offdiag: Vec<R>,
}

impl<R: Real> TridiagonalMatrix<R> {
    pub fn new(diag: Vec<R>, offdiag: Vec<R>) -> Self {
        assert_eq!(offdiag.len() + 1, diag.len().max(1), "offdiag must have m-1 entries");
        TridiagonalMatrix { diag, offdiag }
    }

    pub fn m(&self) -> usize {
        self.diag.len()
    }

    /// `b_{k,k}`, `1 ≤ k ≤ m`.
    pub fn diag(&self, k: usize) -> &R {
        &self.diag[k - 1]
    }

    /// `b_{k,k+1}`, `1 ≤ k < m`.
    pub fn offdiag(&self, k: usize) -> &R {
        &self.offdiag[k - 1]
    }

    pub fn diagonal(&self) -> &[R] {
        &self.diag
    }

    pub fn off_diagonal(&self) -> &[R] {
        &self.offdiag
    }

    fn row_radius(&self, i: usize) -> R {
        let left = if i > 0 { self.offdiag[i - 1].abs() } else { R::zero() };
        let right = if i + 1 < self.m() { self.offdiag[i].abs() } else { R::zero() };
        left + right
    }

    /// Largest right end of the Gershgorin discs.
    pub fn gershgorin_upper(&self) -> R {
        (0..self.m())
            .map(|i| self.diag[i].clone() + self.row_radius(i))
            .fold(R::zero(), R::max)
    }

    /// Smallest left end of the Gershgorin discs.
    pub fn gershgorin_lower(&self) -> R {
        (0..self.m())
            .map(|i| self.diag[i].clone() - self.row_radius(i))
            .reduce(R::min)
            .unwrap_or_else(R::zero)
    }

    /// Pivots `d_k` of the LDLᵀ factorization of `T − μI`.
    pub fn pivots(&self, mu: &R) -> Vec<R> {
        let pivmin = R::tiny()
            * self
                .offdiag
                .iter()
                .map(|e| e.clone() * e.clone())
                .fold(R::one(), R::max);
        let mut out = Vec::with_capacity(self.m());
        let mut prev: Option<R> = None;
        for k in 0..self.m() {
            let mut d = self.diag[k].clone() - mu.clone();
            if let Some(p) = &prev {
                let e = &self.offdiag[k - 1];
                d = d - e.clone() * e.clone() / p.clone();
            }
            // Breakdown: a zero pivot is nudged up so that an eigenvalue at
            // exactly `mu` is not counted as below it.
            if d.abs() < pivmin {
                d = if d < R::zero() { -pivmin.clone() } else { pivmin.clone() };
            }
            prev = Some(d.clone());
            out.push(d);
        }
        out
    }
}

/// Builds `B_m` from the recurrence coefficients:
/// `b_11 = 1/prod_1`, `b_kk = (1 + ratio_k)/prod_k`,
/// `b_{k,k+1} = −√(ratio_{k+1}/(prod_k·prod_{k+1}))`.
pub fn jacobi_matrix<R: Real>(coeffs: &RecurrenceCoeffs<R>) -> TridiagonalMatrix<R> {
    let m = coeffs.m();
    let diag = (1..=m)
        .map(|k| {
            let top = if k == 1 { R::one() } else { R::one() + coeffs.ratio(k).clone() };
            top / coeffs.prod(k).clone()
        })
        .collect();
    let offdiag = (1..m)
        .map(|k| {
            let sq = coeffs.ratio(k + 1).clone() / (coeffs.prod(k).clone() * coeffs.prod(k + 1).clone());
            -sq.sqrt()
        })
        .collect();
    TridiagonalMatrix { diag, offdiag }
}

/// Number of eigenvalues of `t` strictly below `mu` (negative LDLᵀ pivots).
pub fn eigen_count_below<R: Real>(t: &TridiagonalMatrix<R>, mu: &R) -> usize {
    t.pivots(mu).iter().filter(|d| **d < R::zero()).count()
}

/// LDLᵀ pivots of `B_m − μI` written through the coefficients:
/// `d_k = (1 + e_k)/prod_k` with `e_1 = −prod_1 μ` and
/// `e_k = ratio_k e_{k−1}/(1 + e_{k−1}) − prod_k μ`.
/// Algebraically the same as [`TridiagonalMatrix::pivots`], but free of the
/// `(1 + ratio_k) − ratio_k/(…)` cancellation that costs relative accuracy in
/// small eigenvalues when the ratios are large.
pub fn coefficient_pivots<R: Real>(coeffs: &RecurrenceCoeffs<R>, mu: &R) -> Vec<R> {
    let mut out = Vec::with_capacity(coeffs.m());
    let mut e = R::zero();
    for k in 1..=coeffs.m() {
        let p = coeffs.prod(k).clone();
        e = if k == 1 {
            -(p.clone() * mu.clone())
        } else {
            coeffs.ratio(k).clone() * e.clone() / (R::one() + e) - p.clone() * mu.clone()
        };
        let mut u = R::one() + e.clone();
        if u.abs() < R::tiny() {
            u = if u < R::zero() { -R::tiny() } else { R::tiny() };
            e = u.clone() - R::one();
        }
        out.push(u / p);
    }
    out
}

/// Eigenvalues of `B_m` strictly below `μ`, from [`coefficient_pivots`].
pub fn coefficient_count_below<R: Real>(coeffs: &RecurrenceCoeffs<R>, mu: &R) -> usize {
    coefficient_pivots(coeffs, mu).iter().filter(|d| **d < R::zero()).count()
}

/// `Q_0(μ), …, Q_m(μ)` from the renormalized recurrence, carried in
/// difference form `D_k = ratio_k D_{k−1} − prod_k μ Q_{k−1}`,
/// `Q_k = Q_{k−1} + D_k`, so that `Q_{k−1} − Q_{k−2}` is never formed by
/// subtraction.
pub fn evaluate_q<F: Field>(coeffs: &RecurrenceCoeffs<F>, mu: &F) -> Vec<F> {
    let m = coeffs.m();
    let mut q = Vec::with_capacity(m + 1);
    q.push(F::one());
    if m == 0 {
        return q;
    }
    let mut d = -(coeffs.prod(1).clone() * mu.clone());
    q.push(F::one() + d.clone());
    for k in 2..=m {
        let q1 = q[k - 1].clone();
        d = coeffs.ratio(k).clone() * d - coeffs.prod(k).clone() * mu.clone() * q1.clone();
        q.push(q1 + d.clone());
    }
    q
}

/// Sign changes in `Q_0(μ), …, Q_m(μ)`; equals the number of eigenvalues of
/// `B_m` strictly below `μ`. The pair `(Q_k, D_k)` is rescaled as it grows,
/// which leaves all signs intact. A zero takes the sign of its predecessor.
pub fn q_sign_count<R: Real>(coeffs: &RecurrenceCoeffs<R>, mu: &R) -> usize {
    let m = coeffs.m();
    let big = R::from_f64(1e100);
    let mut d = -(coeffs.prod(1).clone() * mu.clone());
    let mut q = R::one() + d.clone();
    let mut changes = 0;
    let mut sign = true;
    let mut step = |v: &R, sign: &mut bool| {
        if *v != R::zero() {
            let s = *v > R::zero();
            if s != *sign {
                changes += 1;
            }
            *sign = s;
        }
    };
    step(&q, &mut sign);
    for k in 2..=m {
        d = coeffs.ratio(k).clone() * d - coeffs.prod(k).clone() * mu.clone() * q.clone();
        q = q + d.clone();
        step(&q, &mut sign);
        let scale = q.abs().max(d.abs());
        if scale > big {
            q = q / scale.clone();
            d = d / scale;
        }
    }
    changes
}

/// Eigenvalue counting route used by the bisection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Negative pivots of `B_m − μI`.
    InertiaBisect,
    /// Sign changes in the `Q_k(μ)` sequence.
    QSignBisect,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::InertiaBisect => "InertiaBisect",
            Backend::QSignBisect => "QSignBisect",
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "inertia" | "inertiabisect" => Ok(Backend::InertiaBisect),
            "qsign" | "qsignbisect" => Ok(Backend::QSignBisect),
            other => Err(format!("unknown backend `{other}` (expected inertia or qsign)")),
        }
    }
}

/// Outcome of one bisection.
#[derive(Clone, Debug, PartialEq)]
pub struct Bisection<R> {
    pub value: R,
    /// Verified starting bracket.
    pub bracket: (R, R),
    /// Final bracket.
    pub lo: R,
    pub hi: R,
    pub iterations: usize,
    /// Relative width of the final bracket.
    pub achieved: f64,
}

pub fn iteration_cap<R: Real>() -> usize {
    40 + R::BITS as usize
}

/// Bisection for the `k`-th smallest eigenvalue given a counting function
/// `count(x) = #{eigenvalues < x}`.
///
/// `bracket` must satisfy `count(lo) < k ≤ count(hi)`; otherwise `fallback`
/// (which must) is used instead. While the bracket spans more than a factor
/// two it is split geometrically, and when `lo = 0` the upper end is pushed
/// down by repeated squaring of the ratio.
pub fn bisect_kth<R: Real>(
    count: impl Fn(&R) -> usize,
    k: usize,
    bracket: (R, R),
    fallback: (R, R),
    rel_tol: f64,
) -> Result<Bisection<R>> {
    let valid = |(lo, hi): &(R, R)| lo < hi && count(lo) < k && count(hi) >= k;
    let start = if valid(&bracket) {
        bracket
    } else if valid(&fallback) {
        fallback
    } else {
        return Err(Error::Domain("no valid eigenvalue bracket".into()));
    };
    let (mut lo, mut hi) = start.clone();
    let tol = R::from_f64(rel_tol);
    let two = R::from_i64(2);
    let cap = iteration_cap::<R>();
    let mut iterations = 0;
    let mut shrink = two.clone();

    while !(hi.clone() - lo.clone() <= tol.clone() * hi.abs()) {
        if iterations >= cap {
            return Err(stalled(&lo, &hi, rel_tol, iterations));
        }
        let mid = if lo == R::zero() && hi > R::zero() {
            let probe = hi.clone() / shrink.clone();
            shrink = shrink.clone() * shrink;
            probe
        } else if lo > R::zero() && hi > two.clone() * lo.clone() {
            (lo.clone() * hi.clone()).sqrt()
        } else {
            (lo.clone() + hi.clone()) / two.clone()
        };
        if !(mid > lo && mid < hi) {
            return Err(stalled(&lo, &hi, rel_tol, iterations));
        }
        iterations += 1;
        if count(&mid) >= k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let achieved = ((hi.clone() - lo.clone()) / hi.abs()).to_f64();
    Ok(Bisection {
        value: (lo.clone() + hi.clone()) / two,
        bracket: start,
        lo,
        hi,
        iterations,
        achieved,
    })
}

fn stalled<R: Real>(lo: &R, hi: &R, requested: f64, iterations: usize) -> Error {
    Error::NonConvergence {
        achieved: ((hi.clone() - lo.clone()) / hi.abs()).to_f64(),
        requested,
        iterations,
    }
}

fn default_fallback<R: Real>(t: &TridiagonalMatrix<R>) -> (R, R) {
    let upper = t.gershgorin_upper();
    let hi = upper.clone() + upper.abs() * R::from_i64(4) * R::epsilon() + R::tiny();
    (t.gershgorin_lower().min(R::zero()), hi)
}

/// Smallest eigenvalue of `t` by inertia bisection to relative width `rel_tol`.
pub fn smallest_eigenvalue<R: Real>(
    t: &TridiagonalMatrix<R>,
    bracket: (R, R),
    rel_tol: f64,
) -> Result<Bisection<R>> {
    bisect_kth(|x| eigen_count_below(t, x), 1, bracket, default_fallback(t), rel_tol)
}

/// All eigenvalues in ascending order, each by its own bisection.
pub fn all_eigenvalues<R: Real>(t: &TridiagonalMatrix<R>, rel_tol: f64) -> Result<Vec<R>> {
    let fb = default_fallback(t);
    (1..=t.m())
        .map(|k| bisect_kth(|x| eigen_count_below(t, x), k, fb.clone(), fb.clone(), rel_tol).map(|b| b.value))
        .collect()
}

/// Where the bisection's starting bracket came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketSource {
    /// `m = 1`: the eigenvalue is the single matrix entry.
    Exact,
    BoundsEnvelope,
    Gershgorin,
}

/// Computed Markov constant with the metadata of its computation.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkovResult {
    pub spec: ProblemSpec,
    /// Smallest eigenvalue of `B_m`.
    pub mu1: f64,
    /// Largest eigenvalue `1/μ₁` of `A_m`.
    pub nu: f64,
    pub c_squared: f64,
    pub c: f64,
    pub bracket_used: (f64, f64),
    pub bracket_source: BracketSource,
    pub iterations: usize,
    pub backend: Backend,
    pub tolerance: f64,
    pub precision: Precision,
    /// Set when a double-precision run stalled and was redone in extended.
    pub escalated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    /// Relative bracket width; defaults to 1e−13 (double) or 1e−30 (extended).
    pub rel_tol: Option<f64>,
    pub precision: Precision,
    pub backend: Backend,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            rel_tol: None,
            precision: Precision::Auto,
            backend: Backend::InertiaBisect,
        }
    }
}

pub const DEFAULT_REL_TOL_DOUBLE: f64 = 1e-13;
pub const DEFAULT_REL_TOL_EXTENDED: f64 = 1e-30;

/// `c_n(λ) = 2/√μ₁` for the instance.
///
/// A double-precision run that cannot reach the tolerance is repeated once in
/// extended precision.
pub fn markov_constant(spec: &ProblemSpec, opts: &SolveOptions) -> Result<MarkovResult> {
    match opts.precision.resolve(spec.n(), spec.lambda()) {
        Precision::Extended => {
            let tol = opts.rel_tol.unwrap_or(DEFAULT_REL_TOL_EXTENDED);
            solve_in::<Ext>(spec, tol, opts.backend, Precision::Extended)
        }
        _ => {
            let tol = opts.rel_tol.unwrap_or(DEFAULT_REL_TOL_DOUBLE);
            match solve_in::<f64>(spec, tol, opts.backend, Precision::Double) {
                Err(Error::NonConvergence { .. }) => {
                    let mut r = solve_in::<Ext>(spec, tol, opts.backend, Precision::Extended)?;
                    r.escalated = true;
                    Ok(r)
                }
                other => other,
            }
        }
    }
}

/// Starting bracket on μ from the bounds envelope on c²: `[4/U, 4/L]`
/// widened by a factor two on each side.
pub fn envelope_bracket(spec: &ProblemSpec) -> Option<(f64, f64)> {
    let report = bounds::envelope(spec);
    match (report.envelope.lower_c2, report.envelope.upper_c2) {
        (Some(l), Some(u)) if l > 0.0 && u.is_finite() => Some((4.0 / (2.0 * u), 2.0 * 4.0 / l)),
        _ => None,
    }
}

fn solve_in<R: Real>(spec: &ProblemSpec, rel_tol: f64, backend: Backend, precision: Precision) -> Result<MarkovResult> {
    let coeffs = build_coeffs::<R>(spec)?;
    let t = jacobi_matrix(&coeffs);

    let (mu, bracket, source, iterations, achieved) = if t.m() == 1 {
        let mu = t.diag(1).clone();
        (mu.clone(), (mu.clone(), mu), BracketSource::Exact, 0, 0.0)
    } else {
        let fallback = default_fallback(&t);
        let (bracket, source) = match envelope_bracket(spec) {
            Some((lo, hi)) => ((R::from_f64(lo), R::from_f64(hi)), BracketSource::BoundsEnvelope),
            None => (fallback.clone(), BracketSource::Gershgorin),
        };
        let b = match backend {
            Backend::InertiaBisect => bisect_kth(|x| coefficient_count_below(&coeffs, x), 1, bracket.clone(), fallback, rel_tol)?,
            Backend::QSignBisect => bisect_kth(|x| q_sign_count(&coeffs, x), 1, bracket.clone(), fallback, rel_tol)?,
        };
        let source = if b.bracket == bracket { source } else { BracketSource::Gershgorin };
        (b.value, b.bracket, source, b.iterations, b.achieved)
    };

    let four = R::from_i64(4);
    let c_squared = four / mu.clone();
    let c = R::from_i64(2) / mu.sqrt();
    let mu1 = mu.to_f64();
    Ok(MarkovResult {
        spec: *spec,
        mu1,
        nu: (R::one() / mu).to_f64(),
        c_squared: c_squared.to_f64(),
        c: c.to_f64(),
        bracket_used: (bracket.0.to_f64(), bracket.1.to_f64()),
        bracket_source: source,
        iterations,
        backend,
        tolerance: achieved,
        precision,
        escalated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::build_coeffs_for;
    use crate::recurrence::Branch;

    fn spec(n: usize, l: f64) -> ProblemSpec {
        ProblemSpec::new(n, l).unwrap()
    }

    fn matrix(n: usize, l: f64) -> TridiagonalMatrix<f64> {
        jacobi_matrix(&build_coeffs::<f64>(&spec(n, l)).unwrap())
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    // Smallest root of Q̃₂(μ) = 1 − 14μ + (9/2)μ² for n = 3, λ = 0.
    fn mu1_n3_l0() -> f64 {
        (14.0 - 178f64.sqrt()) / 9.0
    }

    #[test]
    fn jacobi_matrix_examples() {
        let t = matrix(2, 0.0);
        assert_eq!((t.m(), *t.diag(1)), (1, 0.25));

        let t = matrix(3, 0.0);
        assert!(rel(*t.diag(1), 2.0) < 1e-15);
        assert!(rel(*t.diag(2), 10.0 / 9.0) < 1e-15);
        assert!(rel(*t.offdiag(1), -2f64.sqrt()) < 1e-15);
    }

    #[test]
    fn pivot_product_is_inverse_prod_product() {
        for &(n, l) in &[(6, 0.0), (9, 1.5), (14, -0.3), (21, 4.0)] {
            let coeffs = build_coeffs::<f64>(&spec(n, l)).unwrap();
            let t = jacobi_matrix(&coeffs);
            let det: f64 = t.pivots(&0.0).iter().product();
            let expected: f64 = (1..=coeffs.m()).map(|k| 1.0 / coeffs.prod(k)).product();
            assert!(rel(det, expected) < 1e-12, "n={n} l={l}");
        }
    }

    #[test]
    fn coefficient_pivots_match_matrix_pivots() {
        for &(n, l) in &[(7, 0.0), (12, 2.5), (20, -0.2)] {
            let coeffs = build_coeffs::<f64>(&spec(n, l)).unwrap();
            let t = jacobi_matrix(&coeffs);
            for &mu in &[0.0, 1e-3, 0.5, 3.0] {
                let (a, b) = (coefficient_pivots(&coeffs, &mu), t.pivots(&mu));
                for (x, y) in a.iter().zip(&b) {
                    assert!((x - y).abs() <= 1e-9 * y.abs().max(1.0), "n={n} l={l} mu={mu}");
                }
                assert_eq!(coefficient_count_below(&coeffs, &mu), eigen_count_below(&t, &mu));
            }
        }
    }

    #[test]
    fn count_examples() {
        let t = matrix(3, 0.0);
        assert_eq!(eigen_count_below(&t, &0.0), 0);
        assert_eq!(eigen_count_below(&t, &1.0), 1);
        let g = t.gershgorin_upper();
        assert_eq!(eigen_count_below(&t, &(g * 1.01)), 2);
        assert_eq!(eigen_count_below(&t, &3.0), 1);
        assert_eq!(eigen_count_below(&t, &3.1), 2);
    }

    #[test]
    fn count_at_exact_eigenvalue_is_strict() {
        // diag(1, 2) has eigenvalue exactly 1: nothing strictly below.
        let t = TridiagonalMatrix::new(vec![1.0, 2.0], vec![0.0]);
        assert_eq!(eigen_count_below(&t, &1.0), 0);
        assert_eq!(eigen_count_below(&t, &2.0), 1);
        assert_eq!(eigen_count_below(&t, &2.5), 2);
    }

    #[test]
    fn evaluate_q_examples() {
        let coeffs = build_coeffs::<f64>(&spec(9, 0.7)).unwrap();
        assert!(evaluate_q(&coeffs, &0.0).iter().all(|&v| v == 1.0));

        let coeffs = build_coeffs::<f64>(&spec(2, 0.0)).unwrap();
        assert_eq!(evaluate_q(&coeffs, &0.25), vec![1.0, 0.0]);

        let coeffs = build_coeffs::<f64>(&spec(3, 0.0)).unwrap();
        let q = evaluate_q(&coeffs, &mu1_n3_l0());
        assert!(q[2].abs() < 1e-12);
    }

    #[test]
    fn smallest_eigenvalue_examples() {
        let b = smallest_eigenvalue(&matrix(3, 0.0), (0.0, 1.0), 1e-14).unwrap();
        assert!(rel(b.value, mu1_n3_l0()) < 1e-13);
        assert!(rel(mu1_n3_l0(), 0.0731484) < 1e-6);

        // n = 4, λ = 1/2: ν₂ is the larger root of x² − 26.25x + 59.0625.
        let nu = (26.25 + (26.25f64 * 26.25 - 4.0 * 59.0625).sqrt()) / 2.0;
        let b = smallest_eigenvalue(&matrix(4, 0.5), (0.0, 10.0), 1e-14).unwrap();
        assert!(rel(b.value, 1.0 / nu) < 1e-13);
        assert!(rel(4.0 * nu, 95.0588) < 1e-6);
    }

    #[test]
    fn bad_bracket_falls_back() {
        let t = matrix(3, 0.0);
        let b = smallest_eigenvalue(&t, (0.5, 0.6), 1e-13).unwrap();
        assert!(rel(b.value, mu1_n3_l0()) < 1e-12);
        assert!(b.bracket.0 <= b.value && b.value <= b.bracket.1);
    }

    #[test]
    fn unreachable_tolerance_reports_non_convergence() {
        let t = matrix(6, 1.0);
        let err = smallest_eigenvalue(&t, (0.0, 10.0), 1e-25).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn markov_constant_desk_values() {
        let o = SolveOptions::default();
        let r = markov_constant(&spec(2, 0.0), &o).unwrap();
        assert_eq!(r.c, 4.0);
        assert_eq!(r.bracket_source, BracketSource::Exact);
        for &l in &[-0.4, 0.0, 1.0, 3.0, 10.0] {
            let r = markov_constant(&spec(1, l), &o).unwrap();
            assert!(rel(r.c_squared, 2.0 * (l + 1.0)) < 1e-14);
        }
        let r = markov_constant(&spec(3, 0.0), &o).unwrap();
        assert!(rel(r.c_squared, 2.0 * (14.0 + 178f64.sqrt())) < 1e-12);
        assert_eq!(r.bracket_source, BracketSource::BoundsEnvelope);
        assert!(r.bracket_used.0 <= r.mu1 && r.mu1 <= r.bracket_used.1);
        assert!(r.tolerance <= 1e-13);
        assert!(rel(r.c * r.c, r.c_squared) < 4.0 * f64::EPSILON);
        assert!(rel(r.nu * 4.0, r.c_squared) < 4.0 * f64::EPSILON);
    }

    #[test]
    fn escalation_to_extended() {
        let o = SolveOptions { rel_tol: Some(1e-20), precision: Precision::Double, ..Default::default() };
        let r = markov_constant(&spec(5, 0.5), &o).unwrap();
        assert!(r.escalated);
        assert_eq!(r.precision, Precision::Extended);
        assert!(r.tolerance <= 1e-20);
    }

    #[test]
    fn extended_matches_double() {
        for &(n, l) in &[(4, 0.5), (7, -0.3), (12, 2.0), (25, 10.0)] {
            let d = markov_constant(&spec(n, l), &SolveOptions { precision: Precision::Double, ..Default::default() }).unwrap();
            let e = markov_constant(&spec(n, l), &SolveOptions { precision: Precision::Extended, ..Default::default() }).unwrap();
            assert!(rel(d.c_squared, e.c_squared) < 1e-12, "n={n} l={l}");
            assert!(e.tolerance <= 1e-30);
        }
    }

    #[test]
    fn backends_agree() {
        for &l in &[-0.45, -0.25, 0.0, 0.5, 1.0, 2.0, 5.0, 25.0] {
            for n in 3..=60 {
                let a = markov_constant(&spec(n, l), &SolveOptions::default()).unwrap();
                let b = markov_constant(
                    &spec(n, l),
                    &SolveOptions { backend: Backend::QSignBisect, ..Default::default() },
                )
                .unwrap();
                assert!(rel(a.mu1, b.mu1) < 1e-11, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn q_sign_count_matches_inertia() {
        let coeffs = build_coeffs_for(10, &0.3, Branch::Even).unwrap();
        let t = jacobi_matrix(&coeffs);
        let mut mu = 1e-6;
        while mu < t.gershgorin_upper() * 2.0 {
            assert_eq!(q_sign_count(&coeffs, &mu), eigen_count_below(&t, &mu), "mu={mu}");
            mu *= 1.37;
        }
    }

    #[test]
    fn all_eigenvalues_sorted_and_counted() {
        let t = matrix(15, 1.0);
        let ev = all_eigenvalues(&t, 1e-14).unwrap();
        assert_eq!(ev.len(), t.m());
        for w in ev.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, v) in ev.iter().enumerate() {
            assert_eq!(eigen_count_below(&t, &(v * 0.999999)), i);
        }
    }
}
