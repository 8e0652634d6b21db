use markov_core::closed_forms::{
    a1, a2, a2_even_estimates, a2_odd_estimates, d2, d2_recurrence_step, q_coefficients, q_coefficients_for,
    r_lambda, r_lambda_decomposed, ArithmeticKind, CoeffValues,
};
use markov_core::{Branch, Field, ProblemSpec};
use num_rational::BigRational;

const LAMBDAS: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (-1, 4), (7, 3)];

fn q(p: i64, d: i64) -> BigRational {
    BigRational::frac(p, d)
}

#[test]
fn leading_coefficients_match_closed_forms_exactly() {
    for &(p, d) in &LAMBDAS {
        let l = q(p, d);
        for branch in [Branch::Even, Branch::Odd] {
            for m in 1..=15 {
                let c = q_coefficients_for(m, &l, branch).unwrap();
                assert_eq!(c.len(), m + 1);
                assert_eq!(c[0], BigRational::one());
                assert_eq!(c[1], a1(m, &l, branch).unwrap(), "A1 m={m} lambda={p}/{d} {branch:?}");
                let second = c.get(2).cloned().unwrap_or_else(BigRational::zero);
                assert_eq!(second, a2(m, &l, branch).unwrap(), "A2 m={m} lambda={p}/{d} {branch:?}");
                assert!(c.iter().all(|v| *v > BigRational::zero()));
            }
        }
    }
}

#[test]
fn second_coefficient_telescopes_and_d2_recurrence_holds() {
    for &(p, d) in &LAMBDAS {
        let l = q(p, d);
        for branch in [Branch::Even, Branch::Odd] {
            assert_eq!(d2(1, &l, branch).unwrap(), BigRational::zero());
            for m in 2..=15 {
                let diff = a2(m, &l, branch).unwrap() - a2(m - 1, &l, branch).unwrap();
                let dm = d2(m, &l, branch).unwrap();
                assert_eq!(diff, dm, "m={m} lambda={p}/{d} {branch:?}");
                let prev = d2(m - 1, &l, branch).unwrap();
                assert_eq!(d2_recurrence_step(m, &l, branch, &prev).unwrap(), dm);
            }
        }
    }
}

#[test]
fn r_lambda_decomposition_is_a_polynomial_identity() {
    // Degree 4 in m and 3 in λ: a 6 × 5 grid of distinct points determines it.
    let ms = [q(-3, 2), q(0, 1), q(1, 3), q(2, 1), q(7, 1), q(25, 4)];
    let ls = [q(-2, 5), q(0, 1), q(1, 2), q(7, 3), q(10, 1)];
    for m in &ms {
        for l in &ls {
            assert_eq!(r_lambda(m, l), r_lambda_decomposed(m, l));
        }
    }
}

#[test]
fn exact_and_float_coefficients_agree() {
    for &(n, l) in &[(9, 0.5), (12, -0.25), (17, 7.0 / 3.0)] {
        let s = ProblemSpec::new(n, l).unwrap();
        let exact = q_coefficients(&s, ArithmeticKind::ExactRational).unwrap();
        let float = q_coefficients(&s, ArithmeticKind::Float).unwrap();
        assert!(matches!(exact.values, CoeffValues::Exact(_)));
        for (a, b) in exact.to_f64().iter().zip(float.to_f64()) {
            assert!((a - b).abs() <= 1e-11 * a.abs(), "n={n} lambda={l}: {a} vs {b}");
        }
    }
}

#[test]
fn second_coefficient_estimates_hold() {
    for &l in &[-0.49, -0.3, 0.0, 0.5, 1.0, 2.0, 5.0, 25.0] {
        for m in 2..=40 {
            let even = a2(m, &l, Branch::Even).unwrap();
            let (lo, hi) = a2_even_estimates(m, &l);
            assert!(lo <= even && even <= hi, "even m={m} lambda={l}");
            let odd = a2(m, &l, Branch::Odd).unwrap();
            let (lo, hi) = a2_odd_estimates(m, &l);
            assert!(lo <= odd && odd <= hi, "odd m={m} lambda={l}");
        }
    }
}

#[test]
fn estimates_are_exact_inequalities_in_rationals() {
    for &(p, d) in &LAMBDAS {
        let l = q(p, d);
        for m in 2..=15 {
            let (lo, hi) = a2_even_estimates(m, &l);
            let v = a2(m, &l, Branch::Even).unwrap();
            assert!(lo <= v && v <= hi);
            let (lo, hi) = a2_odd_estimates(m, &l);
            let v = a2(m, &l, Branch::Odd).unwrap();
            assert!(lo <= v && v <= hi);
        }
    }
}
