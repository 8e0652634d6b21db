//! Closed forms of the two lowest coefficients of `Q_m`, their increments
//! `D_{2,m}`, the coefficient estimates, and the full coefficient vector of
//! `Q_m` by propagating the recurrence symbolically in `μ`.
//!
//! All formulas are generic over [`Field`]; with `BigRational` they are
//! exact, which is how the identities between them are checked.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::real::Field;
use crate::recurrence::{build_coeffs_for, check_lambda, ratio, Branch, ProblemSpec};

fn int<F: Field>(v: i64) -> F {
    F::from_i64(v)
}

/// `m + a` for integer `m` and scalar `a`.
fn shift<F: Field>(m: usize, a: F) -> F {
    int::<F>(m as i64) + a
}

/// `A_{1,m}` (even) or `Ã_{1,m}` (odd): the trace of `A_m`.
pub fn a1<F: Field>(m: usize, lambda: &F, branch: Branch) -> Result<F> {
    check_lambda(lambda)?;
    let l = lambda.clone();
    let mf: F = int(m as i64);
    let den = int::<F>(2) * l.clone() + F::one();
    Ok(match branch {
        Branch::Even => {
            mf.clone() * shift(m + 1, F::zero()) * shift(m, l.clone()) * shift(m + 1, l) / den
        }
        Branch::Odd => {
            let quad = mf.clone() * mf.clone() + l.clone() * mf.clone() - F::frac(1, 2);
            mf * shift(m, l) * quad / den
        }
    })
}

/// `(2λ+1)(2λ+5)`.
fn den15<F: Field>(l: &F) -> F {
    (int::<F>(2) * l.clone() + F::one()) * (int::<F>(2) * l.clone() + int(5))
}

/// `D_{2,m} = A_{2,m} − A_{2,m−1}` (even) or its odd counterpart, `m ≥ 1`,
/// with `D_{2,1} = 0`.
pub fn d2<F: Field>(m: usize, lambda: &F, branch: Branch) -> Result<F> {
    check_lambda(lambda)?;
    if m < 1 {
        return Err(Error::IndexOutOfDomain { what: "D2", index: m });
    }
    if m == 1 {
        return Ok(F::zero());
    }
    let l = lambda.clone();
    let mi = m as i64;
    let mf: F = int(mi);
    let two_l_3 = int::<F>(2) * l.clone() + int(3);
    Ok(match branch {
        Branch::Even => {
            let bracket = mf.clone() * mf.clone() + l.clone() * mf.clone() - int::<F>(2) / two_l_3;
            int::<F>(2) * int(mi - 1) * mf * shift(m, l.clone()) * shift(m + 1, l.clone())
                * (int::<F>(2 * mi) + l.clone())
                * bracket
                / den15(&l)
        }
        Branch::Odd => {
            let bracket = mf.clone() * mf.clone() + (l.clone() - F::one()) * mf
                - (int::<F>(2) * l.clone() + F::one()) / int(2)
                - int::<F>(2) / two_l_3;
            int::<F>(mi - 1) * int(2 * mi - 1) * shift(m, l.clone())
                * (int::<F>(2 * mi - 1) + l.clone())
                * (int::<F>(2 * mi - 1) + int::<F>(2) * l.clone())
                * bracket
                / (int::<F>(2) * den15(&l))
        }
    })
}

/// Right-hand side of the first-order recurrence satisfied by `D_{2,m}`,
/// given `D_{2,m−1}`; `m ≥ 2`.
pub fn d2_recurrence_step<F: Field>(m: usize, lambda: &F, branch: Branch, prev: &F) -> Result<F> {
    check_lambda(lambda)?;
    if m < 2 {
        return Err(Error::IndexOutOfDomain { what: "D2 recurrence", index: m });
    }
    let l = lambda.clone();
    let mi = m as i64;
    let mf: F = int(mi);
    let two_l_1 = int::<F>(2) * l.clone() + F::one();
    let carried = ratio(m, lambda, branch)? * prev.clone();
    let source = match branch {
        Branch::Even => {
            int::<F>(2) * int(mi - 1) * mf.clone() * mf
                * (int::<F>(mi - 1) + l.clone())
                * shift(m, l.clone())
                * (int::<F>(2 * mi - 1) + l.clone())
                * (int::<F>(2 * mi) + l.clone())
                / (two_l_1 * (int::<F>(2 * mi - 1) + int::<F>(2) * l))
        }
        Branch::Odd => {
            let bracket = mf.clone() * mf.clone() + (l.clone() - int(2)) * mf - l.clone() + F::frac(1, 2);
            int::<F>(mi - 1) * int(2 * mi - 1)
                * (int::<F>(2 * mi - 2) + l.clone())
                * (int::<F>(2 * mi - 1) + l)
                * bracket
                / (int::<F>(2) * two_l_1)
        }
    };
    Ok(carried + source)
}

/// The quartic `r_λ(m)` in the odd second coefficient.
pub fn r_lambda<F: Field>(m: &F, lambda: &F) -> F {
    let (m, l) = (m.clone(), lambda.clone());
    let two_l_3 = int::<F>(2) * l.clone() + int(3);
    let m2 = m.clone() * m.clone();
    let m3 = m2.clone() * m.clone();
    let m4 = m3.clone() * m.clone();
    let l2 = l.clone() * l.clone();
    let l3 = l2.clone() * l.clone();
    int::<F>(12) * two_l_3.clone() * m4
        + int::<F>(24) * l.clone() * two_l_3 * m3
        + int::<F>(4) * (int::<F>(6) * l3.clone() + int::<F>(7) * l2.clone() - int::<F>(19) * l.clone() - int(32)) * m2
        - int::<F>(4) * l.clone() * (int::<F>(2) * l2.clone() + int::<F>(19) * l.clone() + int(32)) * m
        - int::<F>(8) * l3
        - int::<F>(20) * l2
        + int::<F>(14) * l
        + int(71)
}

/// `r_λ(m)` written as `(2λ+3)·s(m) − 16(m−2)(2m+1)`, an alternative form
/// of the same polynomial.
pub fn r_lambda_decomposed<F: Field>(m: &F, lambda: &F) -> F {
    let (m, l) = (m.clone(), lambda.clone());
    let m2 = m.clone() * m.clone();
    let m3 = m2.clone() * m.clone();
    let m4 = m3.clone() * m.clone();
    let l2 = l.clone() * l.clone();
    let s = int::<F>(12) * m4 + int::<F>(24) * l.clone() * m3
        + (int::<F>(12) * l2.clone() - int::<F>(4) * l.clone() - int(32)) * m2
        - (int::<F>(4) * l2.clone() + int::<F>(32) * l.clone() + int(16)) * m.clone()
        - int::<F>(4) * l2
        - int::<F>(4) * l.clone()
        + int(13);
    (int::<F>(2) * l + int(3)) * s - int::<F>(16) * (m.clone() - int(2)) * (int::<F>(2) * m + F::one())
}

/// `A_{2,m}` (even) or `Ã_{2,m}` (odd); zero for `m ∈ {0, 1}`.
pub fn a2<F: Field>(m: usize, lambda: &F, branch: Branch) -> Result<F> {
    check_lambda(lambda)?;
    if m < 2 {
        return Ok(F::zero());
    }
    let l = lambda.clone();
    let mi = m as i64;
    let mf: F = int(mi);
    let two_l_3 = int::<F>(2) * l.clone() + int(3);
    let head = int::<F>(mi - 1) * mf.clone() * shift(m, l.clone()) * shift(m + 1, l.clone());
    Ok(match branch {
        Branch::Even => {
            let frac = (int::<F>(4) * l.clone() * l.clone() + int::<F>(2) * l.clone() - int(14))
                / (int::<F>(3) * two_l_3);
            let bracket = mf.clone() * mf.clone() + (l.clone() + F::one()) * mf + frac;
            head * int(mi + 1) * shift(m + 2, l.clone()) * bracket / (int::<F>(2) * den15(&l))
        }
        Branch::Odd => {
            head * r_lambda(&mf, &l) / (int::<F>(24) * two_l_3 * den15(&l))
        }
    })
}

/// Two-sided estimate of the even `A_{2,m}`, `m ≥ 2`.
pub fn a2_even_estimates<F: Field>(m: usize, lambda: &F) -> (F, F) {
    let l = lambda.clone();
    let mi = m as i64;
    let mf: F = int(mi);
    let den = int::<F>(2) * den15(&l);
    let ml = shift(m, l.clone());
    let ml1 = shift(m + 1, l.clone());
    let lower = int::<F>(mi - 1) * mf.clone() * mf.clone() * int(mi + 1) * ml.clone() * ml.clone() * ml1.clone() * ml1.clone()
        / den.clone();
    let upper = int::<F>(mi - 1) * mf * int(mi + 1) * int(mi + 1) * ml.clone() * ml * ml1 * shift(m + 2, l) / den;
    (lower, upper)
}

/// Sharper lower estimate of the even `A_{2,m}` used for λ ≥ 2.
pub fn a2_even_refined_lower<F: Field>(m: usize, lambda: &F) -> F {
    let l = lambda.clone();
    let mi = m as i64;
    let mf: F = int(mi);
    let ml1 = shift(m + 1, l.clone());
    int::<F>(mi - 1) * mf.clone() * mf * int(mi + 1) * shift(m, l.clone()) * ml1.clone() * ml1 * shift(m + 2, l.clone())
        / (int::<F>(2) * den15(&l))
}

/// Lower and upper estimates of the odd `Ã_{2,m}`, `m ≥ 2`; the lower one
/// switches form at λ = 0.
pub fn a2_odd_estimates<F: Field>(m: usize, lambda: &F) -> (F, F) {
    let l = lambda.clone();
    let mi = m as i64;
    let mf: F = int(mi);
    let den = int::<F>(2) * den15(&l);
    let quad = mf.clone() * mf.clone() + l.clone() * mf.clone();
    let q_half = quad.clone() - F::frac(1, 2);
    let shift_term = if l <= F::zero() { l.clone() / int(3) } else { l.clone() / int(2) };
    let q_low = quad - shift_term - F::frac(7, 2);
    let ml = shift(m, l.clone());
    let ml1 = shift(m + 1, l);
    let lower = int::<F>(mi - 1) * mf.clone() * ml.clone() * ml1.clone() * q_half.clone() * q_low / den.clone();
    let upper = int::<F>(mi - 1) * mf.clone() * mf * ml.clone() * ml * ml1 * q_half / den;
    (lower, upper)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithmeticKind {
    Float,
    ExactRational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoeffValues {
    Float(Vec<f64>),
    Exact(Vec<BigRational>),
}

/// Unsigned coefficients `A_{0,m} = 1, A_{1,m}, …, A_{m,m}` of
/// `Q_m(μ) = Σ (−1)^i A_{i,m} μ^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct QCoefficients {
    pub m: usize,
    pub branch: Branch,
    pub values: CoeffValues,
}

impl QCoefficients {
    pub fn kind(&self) -> ArithmeticKind {
        match self.values {
            CoeffValues::Float(_) => ArithmeticKind::Float,
            CoeffValues::Exact(_) => ArithmeticKind::ExactRational,
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match &self.values {
            CoeffValues::Float(v) => v.clone(),
            CoeffValues::Exact(v) => v.iter().map(Field::approx).collect(),
        }
    }

    /// Signed coefficients of the monic reciprocal polynomial
    /// `x^m Q_m(1/x)`, highest power first.
    pub fn reciprocal(&self) -> Vec<f64> {
        self.to_f64()
            .into_iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 0 { a } else { -a })
            .collect()
    }
}

/// Unsigned coefficients of `Q_m` in the scalar kind `F`.
pub fn q_coefficients_for<F: Field>(m: usize, lambda: &F, branch: Branch) -> Result<Vec<F>> {
    let coeffs = build_coeffs_for(m, lambda, branch)?;
    // Signed power-basis coefficients of Q_{k-2}, Q_{k-1}.
    let mut older: Vec<F> = vec![F::one()];
    let mut prev: Vec<F> = vec![F::one()];
    if m >= 1 {
        prev = vec![F::one(), -coeffs.prod(1).clone()];
    }
    for k in 2..=m {
        let r = coeffs.ratio(k).clone();
        let p = coeffs.prod(k).clone();
        let mut next = vec![F::zero(); k + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i] = next[i].clone() + (F::one() + r.clone()) * c.clone();
            next[i + 1] = next[i + 1].clone() - p.clone() * c.clone();
        }
        for (i, c) in older.iter().enumerate() {
            next[i] = next[i].clone() - r.clone() * c.clone();
        }
        // Q_k(0) = 1; avoids the (1+r)−r rounding in floating point.
        next[0] = F::one();
        older = std::mem::replace(&mut prev, next);
    }
    Ok(prev
        .into_iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c } else { -c })
        .collect())
}

/// Exact coefficients for a rational λ.
pub fn q_coefficients_exact(m: usize, lambda: &BigRational, branch: Branch) -> Result<QCoefficients> {
    Ok(QCoefficients {
        m,
        branch,
        values: CoeffValues::Exact(q_coefficients_for(m, lambda, branch)?),
    })
}

/// Coefficients of `Q_m` for the instance. In exact mode λ must be the
/// double nearest to a fraction with denominator at most 10⁶.
pub fn q_coefficients(spec: &ProblemSpec, kind: ArithmeticKind) -> Result<QCoefficients> {
    let (m, branch) = (spec.m(), spec.branch());
    match kind {
        ArithmeticKind::Float => Ok(QCoefficients {
            m,
            branch,
            values: CoeffValues::Float(q_coefficients_for(m, &spec.lambda(), branch)?),
        }),
        ArithmeticKind::ExactRational => q_coefficients_exact(m, &rational_lambda(spec.lambda())?, branch),
    }
}

pub const MAX_RATIONAL_DENOMINATOR: i64 = 1_000_000;

/// The fraction with the smallest denominator (at most 10⁶) whose nearest
/// double is `x`, found through the continued-fraction convergents.
pub fn rational_lambda(x: f64) -> Result<BigRational> {
    if !x.is_finite() {
        return Err(Error::NonRationalLambda(x));
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        if k2 > MAX_RATIONAL_DENOMINATOR as i128 {
            break;
        }
        if (h2 as f64) / (k2 as f64) == x {
            return Ok(BigRational::new(BigInt::from(h2), BigInt::from(k2)));
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = rest - a;
        if frac == 0.0 {
            break;
        }
        rest = 1.0 / frac;
    }
    Err(Error::NonRationalLambda(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::frac(n, d)
    }

    #[test]
    fn a1_examples() {
        assert_eq!(a1(2, &0.0, Branch::Even).unwrap(), 36.0);
        assert_eq!(a1(2, &0.0, Branch::Odd).unwrap(), 14.0);
        for b in [Branch::Even, Branch::Odd] {
            assert_eq!(a1(0, &1.3, b).unwrap(), 0.0);
        }
        assert!(a1(2, &-0.5, Branch::Even).is_err());
    }

    #[test]
    fn d2_examples() {
        for b in [Branch::Even, Branch::Odd] {
            assert_eq!(d2(1, &q(5, 7), b).unwrap(), q(0, 1));
        }
        assert_eq!(d2(2, &q(0, 1), Branch::Even).unwrap(), q(64, 1));
        assert_eq!(d2(2, &q(0, 1), Branch::Odd).unwrap(), q(9, 2));
    }

    #[test]
    fn r_lambda_examples() {
        assert_eq!(r_lambda(&q(2, 1), &q(0, 1)), q(135, 1));
        assert_eq!(r_lambda(&q(0, 1), &q(0, 1)), q(71, 1));
    }

    #[test]
    fn a2_examples() {
        assert_eq!(a2(2, &q(0, 1), Branch::Even).unwrap(), q(64, 1));
        assert_eq!(a2(2, &q(1, 2), Branch::Even).unwrap(), q(945, 16));
        assert_eq!(a2(2, &q(0, 1), Branch::Odd).unwrap(), q(9, 2));
        for b in [Branch::Even, Branch::Odd] {
            assert_eq!(a2(0, &q(3, 1), b).unwrap(), q(0, 1));
            assert_eq!(a2(1, &q(3, 1), b).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn q_coefficients_examples() {
        let s = ProblemSpec::new(3, 0.0).unwrap();
        let c = q_coefficients(&s, ArithmeticKind::ExactRational).unwrap();
        assert_eq!(c.values, CoeffValues::Exact(vec![q(1, 1), q(14, 1), q(9, 2)]));

        let s = ProblemSpec::new(2, 0.0).unwrap();
        assert_eq!(q_coefficients(&s, ArithmeticKind::Float).unwrap().to_f64(), vec![1.0, 4.0]);

        let s = ProblemSpec::new(4, 0.5).unwrap();
        let c = q_coefficients(&s, ArithmeticKind::Float).unwrap();
        assert_eq!(c.to_f64(), vec![1.0, 26.25, 59.0625]);
        assert_eq!(c.reciprocal(), vec![1.0, -26.25, 59.0625]);
    }

    #[test]
    fn exact_mode_rejects_unrecognizable_lambda() {
        let s = ProblemSpec::new(5, std::f64::consts::PI - 3.0).unwrap();
        assert!(matches!(
            q_coefficients(&s, ArithmeticKind::ExactRational),
            Err(Error::NonRationalLambda(_))
        ));
    }

    #[test]
    fn rational_lambda_recognition() {
        assert_eq!(rational_lambda(7.0 / 3.0).unwrap(), q(7, 3));
        assert_eq!(rational_lambda(-0.25).unwrap(), q(-1, 4));
        assert_eq!(rational_lambda(0.0).unwrap(), q(0, 1));
        assert_eq!(rational_lambda(2.0).unwrap(), q(2, 1));
        assert_eq!(rational_lambda(-0.45).unwrap(), q(-9, 20));
        assert!(rational_lambda(f64::NAN).is_err());
    }

    #[test]
    fn coefficients_positive_and_normalized() {
        for l in [q(-2, 5), q(0, 1), q(7, 3)] {
            for b in [Branch::Even, Branch::Odd] {
                let c = q_coefficients_for(8, &l, b).unwrap();
                assert_eq!(c[0], q(1, 1));
                assert!(c.iter().all(|a| *a > q(0, 1)));
            }
        }
    }

    #[test]
    fn float_estimates_bracket_a2() {
        for m in 2..=40 {
            for &l in &[-0.45, -0.1, 0.0, 0.5, 2.0, 25.0] {
                let v = a2(m, &l, Branch::Even).unwrap();
                let (lo, hi) = a2_even_estimates(m, &l);
                assert!(lo <= v * (1.0 + 1e-14) && v <= hi * (1.0 + 1e-14), "m={m} l={l}");
                let v = a2(m, &l, Branch::Odd).unwrap();
                let (lo, hi) = a2_odd_estimates(m, &l);
                assert!(lo <= v * (1.0 + 1e-14) && v <= hi * (1.0 + 1e-14), "odd m={m} l={l}");
            }
        }
    }
}
