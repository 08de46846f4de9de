use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weyl_core::hermite::build_operators;
use weyl_core::random::{case_rng, random_element};
use weyl_core::sequences::{bernoulli_numbers, euler_polynomial};
use weyl_core::suites::{verify_binomial, verify_convolution, verify_hamiltonian_identity};
use weyl_core::weyl::normal_mul;
use weyl_core::Hamiltonian;

fn normal_ordering(c: &mut Criterion) {
    let a = random_element(&mut case_rng(1, 0));
    let b = random_element(&mut case_rng(1, 1));
    c.bench_function("normal_mul/degree4", |bench| {
        bench.iter(|| normal_mul(black_box(&a), black_box(&b)))
    });
}

fn nested_anticommutators(c: &mut Criterion) {
    let mut group = c.benchmark_group("nested_anticomm_q");
    for n in [4u32, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| Hamiltonian::new().nested_anticomm_q(n))
        });
    }
    group.finish();
}

fn sequences(c: &mut Criterion) {
    c.bench_function("euler_polynomial/24", |bench| {
        bench.iter(|| euler_polynomial(black_box(24)))
    });
    c.bench_function("bernoulli_numbers/40", |bench| {
        bench.iter(|| bernoulli_numbers(black_box(40)))
    });
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite_instance");
    group.sample_size(10);
    group.bench_function("hamiltonian/8", |bench| {
        bench.iter(|| verify_hamiltonian_identity(black_box(8)))
    });
    group.bench_function("convolution/6x6", |bench| {
        bench.iter(|| verify_convolution(6, 6))
    });
    group.bench_function("binomial/12", |bench| {
        bench.iter(|| verify_binomial(12, 12, 12, true))
    });
    group.finish();
}

fn hermite(c: &mut Criterion) {
    let ops = build_operators(64).expect("valid dimension");
    let mut group = c.benchmark_group("hermite");
    group.sample_size(20);
    group.bench_function("build/64", |bench| {
        bench.iter(|| build_operators(black_box(64)))
    });
    group.bench_function("nested_anticomm/8", |bench| {
        bench.iter(|| ops.nested_anticomm(black_box(8)))
    });
    group.finish();
}

criterion_group!(
    benches,
    normal_ordering,
    nested_anticommutators,
    sequences,
    suites,
    hermite
);
criterion_main!(benches);
