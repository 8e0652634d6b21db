//! Scalar ingredients of the three-term recurrences.
//!
//! Everything that drives the recurrences is evaluated from the rational
//! closed forms of `β_k²/β_{k−1}²` and `α_k²β_k²`; the Gamma-based norms
//! [`h_squared`] only feed the C-matrix oracle and the cross-checks.

use libm::lgamma as ln_gamma;

use crate::error::{Error, Result};
use crate::real::Field;

/// Parity split of the degree: `n = 2m` or `n = 2m − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Even,
    Odd,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Even => "even",
            Branch::Odd => "odd",
        }
    }
}

/// One Markov-constant instance: degree `n`, Gegenbauer parameter `λ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProblemSpec {
    n: usize,
    lambda: f64,
}

impl ProblemSpec {
    pub fn new(n: usize, lambda: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::DegreeOutOfDomain(n));
        }
        check_lambda_f64(lambda)?;
        Ok(ProblemSpec { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn branch(&self) -> Branch {
        if self.n.is_multiple_of(2) {
            Branch::Even
        } else {
            Branch::Odd
        }
    }

    /// Reduced size `m = ⌊(n+1)/2⌋`.
    pub fn m(&self) -> usize {
        self.n.div_ceil(2)
    }
}

pub(crate) fn check_lambda_f64(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > -0.5 {
        Ok(())
    } else {
        Err(Error::LambdaOutOfDomain(lambda))
    }
}

pub(crate) fn check_lambda<F: Field>(lambda: &F) -> Result<()> {
    if *lambda > F::frac(-1, 2) {
        Ok(())
    } else {
        Err(Error::LambdaOutOfDomain(lambda.approx()))
    }
}

/// `a + b·λ` with integer `a`, `b`.
pub(crate) fn lin<F: Field>(a: i64, b: i64, lambda: &F) -> F {
    F::from_i64(a) + F::from_i64(b) * lambda.clone()
}

/// Squared Gegenbauer norm `h_i² = Γ(i+2λ) / ((i+λ) Γ(i+1))`.
///
/// For `i = 0` the value `Γ(2λ+1) / (2λ²)` is used, which avoids evaluating
/// Gamma at a negative argument; it is undefined at `λ = 0`.
pub fn h_squared(i: usize, lambda: f64) -> Result<f64> {
    check_lambda_f64(lambda)?;
    if i == 0 {
        if lambda == 0.0 {
            return Err(Error::RemovablePole);
        }
        return Ok(ln_gamma(2.0 * lambda + 1.0).exp() / (2.0 * lambda * lambda));
    }
    let i = i as f64;
    Ok((ln_gamma(i + 2.0 * lambda) - ln_gamma(i + 1.0)).exp() / (i + lambda))
}

/// `α̃₁² = λ² h_0² = Γ(2λ+1)/2`, finite through `λ = 0`.
pub fn alpha_tilde_1_squared(lambda: f64) -> Result<f64> {
    check_lambda_f64(lambda)?;
    Ok(ln_gamma(2.0 * lambda + 1.0).exp() / 2.0)
}

/// Raw `α_k²` (even) or `α̃_k²` (odd), `k ≥ 1`.
pub fn alpha_squared(k: usize, lambda: f64, branch: Branch) -> Result<f64> {
    if k < 1 {
        return Err(Error::IndexOutOfDomain { what: "alpha", index: k });
    }
    match branch {
        Branch::Even => {
            let f = 2.0 * k as f64 - 1.0 + lambda;
            Ok(f * f * h_squared(2 * k - 1, lambda)?)
        }
        Branch::Odd if k == 1 => alpha_tilde_1_squared(lambda),
        Branch::Odd => {
            let f = 2.0 * k as f64 - 2.0 + lambda;
            Ok(f * f * h_squared(2 * k - 2, lambda)?)
        }
    }
}

/// Raw `β_k²` (even) or `β̃_k²` (odd), `k ≥ 1`.
pub fn beta_squared(k: usize, lambda: f64, branch: Branch) -> Result<f64> {
    if k < 1 {
        return Err(Error::IndexOutOfDomain { what: "beta", index: k });
    }
    let i = match branch {
        Branch::Even => 2 * k,
        Branch::Odd => 2 * k - 1,
    };
    Ok(1.0 / h_squared(i, lambda)?)
}

/// `β_k²/β_{k−1}²` (even) or `β̃_k²/β̃_{k−1}²` (odd) for `k ≥ 2`.
pub fn ratio<F: Field>(k: usize, lambda: &F, branch: Branch) -> Result<F> {
    check_lambda(lambda)?;
    if k < 2 {
        return Err(Error::IndexOutOfDomain { what: "ratio", index: k });
    }
    let k = k as i64;
    let l = lambda;
    let kf = F::from_i64(k);
    Ok(match branch {
        Branch::Even => {
            kf * F::from_i64(2 * k - 1) * lin(2 * k, 1, l)
                / (lin(k - 1, 1, l) * lin(2 * k - 2, 1, l) * lin(2 * k - 1, 2, l))
        }
        Branch::Odd => {
            F::from_i64(k - 1) * F::from_i64(2 * k - 1) * lin(2 * k - 1, 1, l)
                / (lin(k - 1, 1, l) * lin(2 * k - 3, 1, l) * lin(2 * k - 3, 2, l))
        }
    })
}

/// `α_k²β_k²` (even) or `α̃_k²β̃_k²` (odd) for `k ≥ 1`.
///
/// The odd `k = 1` value is the simplified `(λ+1)/2`; the printed form has a
/// removable singularity at `λ = 0`.
pub fn prod<F: Field>(k: usize, lambda: &F, branch: Branch) -> Result<F> {
    check_lambda(lambda)?;
    if k < 1 {
        return Err(Error::IndexOutOfDomain { what: "prod", index: k });
    }
    let k = k as i64;
    let l = lambda;
    Ok(match branch {
        Branch::Even => {
            F::from_i64(2 * k) * lin(2 * k - 1, 1, l) * lin(2 * k, 1, l) / lin(2 * k - 1, 2, l)
        }
        Branch::Odd if k == 1 => lin(1, 1, l) / F::from_i64(2),
        Branch::Odd => {
            F::from_i64(2 * k - 1) * lin(2 * k - 2, 1, l) * lin(2 * k - 1, 1, l)
                / lin(2 * k - 2, 2, l)
        }
    })
}

/// Recurrence coefficients for `k = 1..=m`, addressed 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceCoeffs<F> {
    branch: Branch,
    // Slot 0 of `ratios` holds zero; `ratio_1` is never used.
    ratios: Vec<F>,
    prods: Vec<F>,
}

impl<F: Field> RecurrenceCoeffs<F> {
    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn m(&self) -> usize {
        self.prods.len()
    }

    /// `ratio_k`, `2 ≤ k ≤ m`.
    pub fn ratio(&self, k: usize) -> &F {
        assert!(k >= 2 && k <= self.m(), "ratio index {k} outside 2..={}", self.m());
        &self.ratios[k - 1]
    }

    /// `prod_k`, `1 ≤ k ≤ m`.
    pub fn prod(&self, k: usize) -> &F {
        assert!(k >= 1 && k <= self.m(), "prod index {k} outside 1..={}", self.m());
        &self.prods[k - 1]
    }
}

/// Fills `ratio_k` and `prod_k` for `k = 1..=m` of the given branch.
pub fn build_coeffs_for<F: Field>(m: usize, lambda: &F, branch: Branch) -> Result<RecurrenceCoeffs<F>> {
    check_lambda(lambda)?;
    let mut ratios = Vec::with_capacity(m);
    let mut prods = Vec::with_capacity(m);
    for k in 1..=m {
        ratios.push(if k == 1 { F::zero() } else { ratio(k, lambda, branch)? });
        prods.push(prod(k, lambda, branch)?);
    }
    Ok(RecurrenceCoeffs { branch, ratios, prods })
}

/// Coefficients of the instance, evaluated in the scalar kind `F`.
pub fn build_coeffs<F: crate::real::Real>(spec: &ProblemSpec) -> Result<RecurrenceCoeffs<F>> {
    build_coeffs_for(spec.m(), &F::from_f64(spec.lambda()), spec.branch())
}
