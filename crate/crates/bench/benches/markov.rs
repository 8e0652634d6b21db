use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use markov_bench::{spec, sweep_grid, DEGREES, LAMBDAS};
use markov_core::oracle::rayleigh_c_squared;
use markov_core::{
    build_coeffs, jacobi_matrix, markov_constant, q_coefficients, smallest_eigenvalue, ArithmeticKind, Backend, Ext,
    Precision, SolveOptions,
};

fn constant(c: &mut Criterion) {
    let mut g = c.benchmark_group("markov_constant");
    for n in DEGREES {
        for backend in [Backend::InertiaBisect, Backend::QSignBisect] {
            let opts = SolveOptions { backend, ..Default::default() };
            let s = spec(n, 1.0);
            g.bench_with_input(BenchmarkId::new(backend.name(), n), &s, |b, s| {
                b.iter(|| markov_constant(black_box(s), &opts).unwrap())
            });
        }
    }
    for n in [10, 100] {
        let opts = SolveOptions { precision: Precision::Extended, ..Default::default() };
        let s = spec(n, 1.0);
        g.bench_with_input(BenchmarkId::new("extended", n), &s, |b, s| {
            b.iter(|| markov_constant(black_box(s), &opts).unwrap())
        });
    }
    g.finish();
}

fn eigenvalue(c: &mut Criterion) {
    let mut g = c.benchmark_group("smallest_eigenvalue");
    for n in DEGREES {
        let t = jacobi_matrix(&build_coeffs::<f64>(&spec(n, 1.0)).unwrap());
        let bracket = (0.0, t.gershgorin_upper());
        g.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| smallest_eigenvalue(black_box(t), bracket, 1e-13).unwrap())
        });
    }
    g.finish();
}

fn exact_coefficients(c: &mut Criterion) {
    let mut g = c.benchmark_group("q_coefficients_exact");
    g.sample_size(20);
    for n in [10, 20, 30] {
        let s = spec(n, 7.0 / 3.0);
        g.bench_with_input(BenchmarkId::from_parameter(n), &s, |b, s| {
            b.iter(|| q_coefficients(black_box(s), ArithmeticKind::ExactRational).unwrap())
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("gram_oracle");
    g.sample_size(20);
    for n in [4, 8, 12] {
        let s = spec(n, 0.5);
        g.bench_with_input(BenchmarkId::new("double", n), &s, |b, s| {
            b.iter(|| rayleigh_c_squared::<f64>(black_box(s)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("extended", n), &s, |b, s| {
            b.iter(|| rayleigh_c_squared::<Ext>(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let grid = sweep_grid(60);
    c.bench_function(&format!("sweep_{}x{}", grid.len() / LAMBDAS.len(), LAMBDAS.len()), |b| {
        b.iter(|| {
            grid.iter().map(|s| markov_constant(s, &SolveOptions::default()).unwrap().c_squared).sum::<f64>()
        })
    });
}

criterion_group!(benches, constant, eigenvalue, exact_coefficients, oracle, sweep);
criterion_main!(benches);
