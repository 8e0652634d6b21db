//! Two-sided estimates of `c_n²(λ)` and the envelope they form.
//!
//! Every bound is stored on the `c²` scale; estimates stated for `c` are
//! squared on ingestion. Strict inequalities are checked as non-strict.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::recurrence::ProblemSpec;

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundSource {
    /// Even-degree estimate via the Newton-type zero bounds.
    Thm4_2,
    /// Even-degree upper estimate refined for λ ≥ 2.
    Eq4_5,
    /// Odd-degree estimate via the Newton-type zero bounds.
    Thm4_4,
    /// Uniform estimate for all n ≥ 3.
    Thm1_1,
    /// Large-λ estimate (λ ≥ 2) from matrix norms.
    ThmA_e2,
    /// Matrix-norm estimate for all λ.
    ThmA_e3,
    /// Schmidt's asymptotic formula at λ = 1/2.
    Schmidt,
    /// Chebyshev-weight estimates at λ ∈ {0, 1}.
    Legacy_e1,
    /// Limit bracket for (2λ+1)c² as λ → −1/2.
    Cor1_3,
}

impl BoundSource {
    pub const ALL: [BoundSource; 9] = [
        BoundSource::Thm4_2,
        BoundSource::Eq4_5,
        BoundSource::Thm4_4,
        BoundSource::Thm1_1,
        BoundSource::ThmA_e2,
        BoundSource::ThmA_e3,
        BoundSource::Schmidt,
        BoundSource::Legacy_e1,
        BoundSource::Cor1_3,
    ];

    /// Whether the row takes part in the envelope. The special-λ rows
    /// (Schmidt, Legacy_e1) are reported for comparison only.
    pub fn in_envelope(self) -> bool {
        !matches!(self, BoundSource::Schmidt | BoundSource::Legacy_e1 | BoundSource::Cor1_3)
    }

    pub fn label(self) -> &'static str {
        match self {
            BoundSource::Thm4_2 => "Thm4_2",
            BoundSource::Eq4_5 => "Eq4_5",
            BoundSource::Thm4_4 => "Thm4_4",
            BoundSource::Thm1_1 => "Thm1_1",
            BoundSource::ThmA_e2 => "ThmA_e2",
            BoundSource::ThmA_e3 => "ThmA_e3",
            BoundSource::Schmidt => "Schmidt",
            BoundSource::Legacy_e1 => "Legacy_e1",
            BoundSource::Cor1_3 => "Cor1_3",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One estimate of `c²`. Inapplicable rows carry the reason instead of values.
#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub source: BoundSource,
    pub lower_c2: Option<f64>,
    pub upper_c2: Option<f64>,
    pub applicable: bool,
    pub reason: String,
}

impl Bound {
    fn new(source: BoundSource, lower: f64, upper: f64) -> Self {
        Bound {
            source,
            lower_c2: Some(lower),
            upper_c2: Some(upper),
            applicable: true,
            reason: String::new(),
        }
    }

    fn inapplicable(source: BoundSource, reason: impl Into<String>) -> Self {
        Bound {
            source,
            lower_c2: None,
            upper_c2: None,
            applicable: false,
            reason: reason.into(),
        }
    }

    /// Whether `c2` lies in `[lower, upper]`; inapplicable rows contain everything.
    pub fn contains(&self, c2: f64) -> bool {
        !self.applicable
            || (self.lower_c2.is_none_or(|l| l <= c2) && self.upper_c2.is_none_or(|u| c2 <= u))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Envelope {
    pub lower_c2: Option<f64>,
    pub upper_c2: Option<f64>,
    pub lower_source: Option<BoundSource>,
    pub upper_source: Option<BoundSource>,
}

impl Envelope {
    pub fn is_consistent(&self) -> bool {
        match (self.lower_c2, self.upper_c2) {
            (Some(l), Some(u)) => l <= u,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub spec: ProblemSpec,
    pub bounds: Vec<Bound>,
    pub envelope: Envelope,
}

impl BoundsReport {
    pub fn applicable(&self) -> impl Iterator<Item = &Bound> {
        self.bounds.iter().filter(|b| b.applicable)
    }

    pub fn get(&self, source: BoundSource) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.source == source)
    }
}

/// Newton-type bounds on the largest zero of a real, positive-rooted
/// polynomial `x^m − a1 x^{m−1} + a2 x^{m−2} − …`:
/// `a1 − 2a2/a1 ≤ x_max ≤ √(a1² − 2a2)`.
pub fn newton_bounds(a1: f64, a2: f64, m: usize) -> Result<(f64, f64)> {
    if !(a1 > 0.0) || !(a2 >= 0.0) {
        return Err(Error::Domain(format!("newton_bounds needs a1 > 0 and a2 >= 0 (got {a1}, {a2})")));
    }
    if m == 1 && a2 != 0.0 {
        return Err(Error::Domain("a degree-one polynomial has a2 = 0".into()));
    }
    let disc = a1 * a1 - 2.0 * a2;
    if disc < 0.0 {
        return Err(Error::NotRealRooted { a1_sq: a1 * a1, two_a2: 2.0 * a2 });
    }
    Ok((a1 - 2.0 * a2 / a1, disc.sqrt()))
}

fn common_denominator(l: f64) -> f64 {
    (2.0 * l + 1.0) * (2.0 * l + 5.0)
}

/// Thm 4.2 upper estimate for even n.
pub fn even_upper(n: usize, l: f64) -> f64 {
    let n = n as f64;
    n * (n + 2.0 * l) * (n + 2.0 * l + 2.0) * ((n + 2.0) * (n + 2.0 * l + 3.0)).sqrt()
        / (2.0 * (2.0 * l + 1.0) * (2.0 * l + 5.0).sqrt())
}

/// Refined even-degree upper estimate, valid for λ ≥ 2.
pub fn even_upper_refined(n: usize, l: f64) -> f64 {
    let n = n as f64;
    n * (n + 2.0 * l) * (n + 2.0 * l + 2.0) * ((n + 2.0) * (n + 2.0 * l + 2.0)).sqrt()
        / (2.0 * (2.0 * l + 1.0) * (2.0 * l + 5.0).sqrt())
}

/// Even n ≥ 4. For λ ≥ 2 the upper value is the refined one and the row is
/// tagged [`BoundSource::Eq4_5`].
pub fn bounds_even(n: usize, l: f64) -> Bound {
    if !n.is_multiple_of(2) || n < 4 {
        return Bound::inapplicable(BoundSource::Thm4_2, "requires even n >= 4");
    }
    if !(l > -0.5) {
        return Bound::inapplicable(BoundSource::Thm4_2, "requires lambda > -1/2");
    }
    let nf = n as f64;
    let lower = (nf + 2.0) * (nf + 2.0 * l) * (nf + l + 0.5).powi(2) / common_denominator(l);
    if l >= 2.0 {
        Bound::new(BoundSource::Eq4_5, lower, even_upper_refined(n, l))
    } else {
        Bound::new(BoundSource::Thm4_2, lower, even_upper(n, l))
    }
}

/// Odd n ≥ 3, with `λ′ = max{λ, 0}` in the upper estimate.
pub fn bounds_odd(n: usize, l: f64) -> Bound {
    if n % 2 != 1 || n < 3 {
        return Bound::inapplicable(BoundSource::Thm4_4, "requires odd n >= 3");
    }
    if !(l > -0.5) {
        return Bound::inapplicable(BoundSource::Thm4_4, "requires lambda > -1/2");
    }
    let nf = n as f64;
    let l_prime = l.max(0.0);
    let lower = (nf + 1.0) * (nf + l + 0.5).powi(2) * (nf + 2.0 * l + 1.0) / common_denominator(l);
    let upper = (nf + 1.0).powf(1.5) * (nf + 2.0 * l + 1.0).powi(2) * (nf + 2.0 * l_prime + 1.0).sqrt()
        / (2.0 * (2.0 * l + 1.0) * (2.0 * l + 5.0).sqrt());
    Bound::new(BoundSource::Thm4_4, lower, upper)
}

/// Uniform estimate for n ≥ 3.
pub fn bounds_thm11(n: usize, l: f64) -> Bound {
    if n < 3 {
        return Bound::inapplicable(BoundSource::Thm1_1, "requires n >= 3");
    }
    if !(l > -0.5) {
        return Bound::inapplicable(BoundSource::Thm1_1, "requires lambda > -1/2");
    }
    let nf = n as f64;
    let lower = (nf + 1.0) * (nf + l + 0.5).powi(2) * (nf + 2.0 * l) / common_denominator(l);
    let upper = (nf + 1.25 * l + 1.125).powi(4) / (2.0 * (2.0 * l + 1.0) * (2.0 * l + 5.0).sqrt());
    Bound::new(BoundSource::Thm1_1, lower, upper)
}

/// The (e2) row (λ ≥ 2) and the (e3) row, with `λ′ = min{0, λ}` and
/// `λ″ = max{0, λ}` local to (e3).
pub fn bounds_theorem_a(n: usize, l: f64) -> [Bound; 2] {
    if n < 3 || !(l > -0.5) {
        let why = if n < 3 { "requires n >= 3" } else { "requires lambda > -1/2" };
        return [
            Bound::inapplicable(BoundSource::ThmA_e2, why),
            Bound::inapplicable(BoundSource::ThmA_e3, why),
        ];
    }
    let nf = n as f64;
    let e2 = if l >= 2.0 {
        let lower = nf * nf * (nf + l).powi(2) / (4.0 * (l + 1.0) * (l + 2.0));
        let upper = nf * (nf + 2.0 * l + 2.0).powi(3) / ((l + 2.0) * (l + 3.0));
        Bound::new(BoundSource::ThmA_e2, lower, upper)
    } else {
        Bound::inapplicable(BoundSource::ThmA_e2, "requires lambda >= 2")
    };
    let l1 = l.min(0.0);
    let l2 = l.max(0.0);
    let lower = (nf + l).powi(2) * (nf + 2.0 * l1).powi(2) / common_denominator(l);
    let upper = (nf + l + l2 + 2.0).powi(4) / (2.0 * (2.0 * l + 1.0) * (2.0 * l + 5.0).sqrt());
    [e2, Bound::new(BoundSource::ThmA_e3, lower, upper)]
}

/// Interval for `c_n(1/2)` (on `c`, not `c²`) from Schmidt's formula with the
/// remainder `R` at its endpoints 13 (lower) and −6 (upper).
pub fn schmidt_interval(n: usize) -> (f64, f64) {
    let s = 2.0 * n as f64 + 3.0;
    let base = s * s / (4.0 * PI);
    let at = |r: f64| base / (1.0 - (PI * PI - 3.0) / (3.0 * s * s) + 16.0 * r / s.powi(4));
    (at(13.0), at(-6.0))
}

/// Chebyshev-weight estimates on `c` at λ ∈ {0, 1}, returned on `c²`.
pub fn legacy_bounds(n: usize, l: f64) -> Bound {
    if n < 3 {
        return Bound::inapplicable(BoundSource::Legacy_e1, "reported only for n >= 3");
    }
    let nf = n as f64;
    let (lo, hi) = if l == 0.0 {
        (0.472135 * nf * nf, 0.478849 * (nf + 2.0).powi(2))
    } else if l == 1.0 {
        (0.248549 * nf * nf, 0.256861 * (nf + 2.5).powi(2))
    } else {
        return Bound::inapplicable(BoundSource::Legacy_e1, "requires lambda = 0 or 1");
    };
    Bound::new(BoundSource::Legacy_e1, lo * lo, hi * hi)
}

/// Bracket for `lim_{λ→−1/2} (2λ+1) c_n²(λ)`.
pub fn corollary13_bracket(n: usize) -> (f64, f64) {
    let nf = n as f64;
    ((nf + 2.0) * (nf - 1.0) * nf * nf / 4.0, nf * nf * (nf + 1.0).powi(2) / 4.0)
}

/// Every bound row for the instance, applicable or not, plus the envelope of
/// the applicable ones.
pub fn envelope(spec: &ProblemSpec) -> BoundsReport {
    let (n, l) = (spec.n(), spec.lambda());
    let mut bounds = Vec::with_capacity(BoundSource::ALL.len());

    bounds.push(bounds_even(n, l));
    bounds.push(bounds_odd(n, l));
    bounds.push(bounds_thm11(n, l));
    bounds.extend(bounds_theorem_a(n, l));
    bounds.push(if l == 0.5 {
        let (lo, hi) = schmidt_interval(n);
        Bound::new(BoundSource::Schmidt, lo * lo, hi * hi)
    } else {
        Bound::inapplicable(BoundSource::Schmidt, "requires lambda = 1/2")
    });
    bounds.push(legacy_bounds(n, l));
    bounds.push(Bound::inapplicable(
        BoundSource::Cor1_3,
        "limit of (2*lambda+1)*c^2 as lambda -> -1/2; not a bound at fixed lambda",
    ));

    let mut env = Envelope { lower_c2: None, upper_c2: None, lower_source: None, upper_source: None };
    for b in bounds.iter().filter(|b| b.applicable && b.source.in_envelope()) {
        if let Some(v) = b.lower_c2 {
            if env.lower_c2.is_none_or(|cur| v > cur) {
                env.lower_c2 = Some(v);
                env.lower_source = Some(b.source);
            }
        }
        if let Some(v) = b.upper_c2 {
            if env.upper_c2.is_none_or(|cur| v < cur) {
                env.upper_c2 = Some(v);
                env.upper_source = Some(b.source);
            }
        }
    }
    BoundsReport { spec: *spec, bounds, envelope: env }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn newton_bounds_examples() {
        assert_eq!(newton_bounds(3.5, 0.0, 1).unwrap(), (3.5, 3.5));
        let (lo, hi) = newton_bounds(3.0, 2.0, 2).unwrap();
        assert!(close(lo, 5.0 / 3.0, 1e-15) && close(hi, 5f64.sqrt(), 1e-15));
        let (lo, hi) = newton_bounds(26.25, 59.0625, 2).unwrap();
        assert!(close(lo, 21.75, 1e-15));
        assert!(close(hi, 23.8943, 1e-5));
        assert!(lo <= 23.76470 && 23.76470 <= hi);
    }

    #[test]
    fn newton_bounds_errors() {
        assert!(matches!(newton_bounds(1.0, 1.0, 2), Err(Error::NotRealRooted { .. })));
        assert!(newton_bounds(0.0, 0.0, 2).is_err());
        assert!(newton_bounds(2.0, 1.0, 1).is_err());
    }

    #[test]
    fn even_examples() {
        let b = bounds_even(4, 0.5);
        assert_eq!(b.source, BoundSource::Thm4_2);
        assert!(close(b.lower_c2.unwrap(), 62.5, 1e-14));
        assert!(close(b.upper_c2.unwrap(), 140.0 * 8f64.sqrt() / 4.0, 1e-14));
        assert!(close(b.upper_c2.unwrap(), 98.995, 1e-5));
        assert!(b.contains(95.0588));

        let b = bounds_even(10, 2.0);
        assert_eq!(b.source, BoundSource::Eq4_5);
        assert!(close(b.upper_c2.unwrap(), 2240.0 * 192f64.sqrt() / 30.0, 1e-14));
        assert!(close(b.upper_c2.unwrap(), 1034.6, 1e-4));
        assert!(!bounds_even(5, 0.0).applicable);
        assert!(!bounds_even(2, 0.0).applicable);
    }

    #[test]
    fn odd_examples() {
        let b = bounds_odd(3, 0.0);
        assert!(close(b.lower_c2.unwrap(), 39.2, 1e-14));
        assert!(close(b.upper_c2.unwrap(), 256.0 / (2.0 * 5f64.sqrt()), 1e-14));
        assert!(close(b.upper_c2.unwrap(), 57.243, 1e-4));
        assert!(b.contains(54.683));
        assert!(close(bounds_odd(3, 1.0).lower_c2.unwrap(), 4.0 * 20.25 * 6.0 / 21.0, 1e-14));
        assert!(close(bounds_odd(5, 0.0).lower_c2.unwrap(), 217.8, 1e-14));
        assert!(!bounds_odd(4, 0.0).applicable);
    }

    #[test]
    fn thm11_examples() {
        let b = bounds_thm11(3, 0.0);
        assert!(close(b.lower_c2.unwrap(), 29.4, 1e-14));
        assert!(close(b.upper_c2.unwrap(), 4.125f64.powi(4) / (2.0 * 5f64.sqrt()), 1e-14));
        assert!(close(b.upper_c2.unwrap(), 64.7414, 1e-5));
        assert!(close(bounds_thm11(10, 0.0).lower_c2.unwrap(), 2425.5, 1e-14));
        assert!(!bounds_thm11(2, 0.0).applicable);
    }

    #[test]
    fn theorem_a_examples() {
        let [e2, _] = bounds_theorem_a(10, 30.0);
        assert!(close(e2.lower_c2.unwrap(), 160000.0 / 3968.0, 1e-14));
        assert!(close(e2.upper_c2.unwrap(), 10.0 * 72f64.powi(3) / (32.0 * 33.0), 1e-14));
        let [e2, e3] = bounds_theorem_a(10, 0.0);
        assert!(!e2.applicable);
        assert!(close(e3.lower_c2.unwrap(), 2000.0, 1e-14));
        assert!(close(e3.upper_c2.unwrap(), 12f64.powi(4) / (2.0 * 5f64.sqrt()), 1e-14));
        assert!(close(e3.upper_c2.unwrap(), 4636.6, 1e-4));
    }

    #[test]
    fn schmidt_examples() {
        let (lo, hi) = schmidt_interval(4);
        assert!(close(lo, 9.674517, 1e-6) && close(hi, 9.880647, 1e-6));
        assert!(lo < 9.74981 && 9.74981 < hi);
        let (lo, hi) = schmidt_interval(2);
        assert!(close(lo, 3.750, 1e-3) && close(hi, 4.270, 1e-3));
        assert!(lo < 15f64.sqrt() && 15f64.sqrt() < hi);
    }

    #[test]
    fn legacy_examples() {
        let b = legacy_bounds(3, 0.0);
        assert!(close(b.lower_c2.unwrap().sqrt(), 4.249215, 1e-12));
        assert!(close(b.upper_c2.unwrap().sqrt(), 0.478849 * 25.0, 1e-12));
        assert!(b.contains(7.3948f64.powi(2)));
        let b = legacy_bounds(3, 1.0);
        assert!(close(b.lower_c2.unwrap().sqrt(), 2.236941, 1e-12));
        assert!(close(b.upper_c2.unwrap().sqrt(), 0.256861 * 30.25, 1e-12));
        assert!(!legacy_bounds(3, 0.5).applicable);
    }

    #[test]
    fn corollary13_examples() {
        assert_eq!(corollary13_bracket(4), (72.0, 100.0));
        assert_eq!(corollary13_bracket(3), (22.5, 36.0));
        assert_eq!(corollary13_bracket(10), (2700.0, 3025.0));
    }

    #[test]
    fn envelope_examples() {
        let r = envelope(&ProblemSpec::new(4, 0.5).unwrap());
        let e = &r.envelope;
        assert!(close(e.lower_c2.unwrap(), 62.5, 1e-14));
        assert!(close(e.upper_c2.unwrap(), 98.995, 1e-5));
        assert_eq!((e.lower_source, e.upper_source), (Some(BoundSource::Thm4_2), Some(BoundSource::Thm4_2)));
        assert!(close(r.get(BoundSource::Thm1_1).unwrap().upper_c2.unwrap(), 111.6, 1e-3));

        let r = envelope(&ProblemSpec::new(3, 0.0).unwrap());
        assert_eq!(r.envelope.lower_source, Some(BoundSource::Thm4_4));
        assert!(close(r.envelope.lower_c2.unwrap(), 39.2, 1e-14));
        let rows: Vec<_> = r.applicable().map(|b| b.source).collect();
        assert_eq!(
            rows,
            vec![BoundSource::Thm4_4, BoundSource::Thm1_1, BoundSource::ThmA_e3, BoundSource::Legacy_e1]
        );

        let r = envelope(&ProblemSpec::new(2, 0.0).unwrap());
        assert_eq!(r.applicable().count(), 0);
        assert_eq!(r.envelope.lower_c2, None);
        assert!(r.bounds.iter().all(|b| !b.reason.is_empty()));
    }

    #[test]
    fn refined_even_upper_dominates() {
        for n in (4..=60).step_by(2) {
            for &l in &[2.0, 3.5, 10.0, 25.0] {
                assert!(even_upper_refined(n, l) <= even_upper(n, l));
            }
        }
    }
}
