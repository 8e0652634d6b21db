//! Instances shared by the benchmarks.

use markov_core::ProblemSpec;

pub const DEGREES: [usize; 4] = [10, 100, 1_000, 10_000];

pub const LAMBDAS: [f64; 3] = [-0.25, 1.0, 25.0];

pub fn spec(n: usize, lambda: f64) -> ProblemSpec {
    ProblemSpec::new(n, lambda).expect("benchmark instances lie in the domain")
}

/// A `rows × cols` grid over degrees `3..` and the benchmark λ values, the
/// shape of a typical sweep.
pub fn sweep_grid(max_n: usize) -> Vec<ProblemSpec> {
    (3..=max_n).flat_map(|n| LAMBDAS.iter().map(move |&l| spec(n, l))).collect()
}
