use markov_core::bounds::envelope;
use markov_core::oracle::oracle_via_c;
use markov_core::spectral::{coefficient_count_below, eigen_count_below, q_sign_count};
use markov_core::{build_coeffs, jacobi_matrix, markov_constant, Backend, ProblemSpec, SolveOptions};
use proptest::prelude::*;

fn lambda() -> impl Strategy<Value = f64> {
    prop_oneof![-0.49f64..0.0, 0.0f64..3.0, 3.0f64..40.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn c_squared_matches_four_over_mu(n in 1usize..80, l in lambda()) {
        let r = markov_constant(&ProblemSpec::new(n, l).unwrap(), &SolveOptions::default()).unwrap();
        prop_assert!((r.c_squared * r.mu1 - 4.0).abs() < 1e-14);
        prop_assert!((r.c * r.c - r.c_squared).abs() <= 4.0 * f64::EPSILON * r.c_squared);
        prop_assert!(r.bracket_used.0 <= r.mu1 && r.mu1 <= r.bracket_used.1);
    }

    #[test]
    fn applicable_bounds_contain_the_constant(n in 3usize..70, l in lambda()) {
        let s = ProblemSpec::new(n, l).unwrap();
        let c2 = markov_constant(&s, &SolveOptions::default()).unwrap().c_squared;
        let report = envelope(&s);
        prop_assert!(report.envelope.is_consistent());
        for b in report.applicable() {
            prop_assert!(b.contains(c2), "{:?} misses {}", b, c2);
        }
    }

    #[test]
    fn monotone_within_parity(n in 1usize..60, l in lambda()) {
        let c = |n| markov_constant(&ProblemSpec::new(n, l).unwrap(), &SolveOptions::default()).unwrap().c_squared;
        prop_assert!(c(n) <= c(n + 2));
    }

    #[test]
    fn counting_routes_agree(n in 1usize..60, l in lambda(), t in -12.0f64..4.0) {
        let coeffs = build_coeffs::<f64>(&ProblemSpec::new(n, l).unwrap()).unwrap();
        let matrix = jacobi_matrix(&coeffs);
        let mu = 10f64.powf(t);
        let k = coefficient_count_below(&coeffs, &mu);
        prop_assert_eq!(k, q_sign_count(&coeffs, &mu));
        prop_assert_eq!(k, eigen_count_below(&matrix, &mu));
    }

    #[test]
    fn backends_agree(n in 1usize..60, l in lambda()) {
        let s = ProblemSpec::new(n, l).unwrap();
        let a = markov_constant(&s, &SolveOptions::default()).unwrap();
        let b = markov_constant(&s, &SolveOptions { backend: Backend::QSignBisect, ..Default::default() }).unwrap();
        prop_assert!((a.mu1 - b.mu1).abs() <= 1e-11 * a.mu1);
    }

    #[test]
    fn c_matrix_route_agrees(n in 1usize..16, l in -0.4f64..10.0) {
        let s = ProblemSpec::new(n, l).unwrap();
        let c2 = markov_constant(&s, &SolveOptions::default()).unwrap().c_squared;
        let via_c = oracle_via_c(&s).unwrap();
        prop_assert!((c2 - via_c).abs() <= 1e-9 * c2);
    }
}
