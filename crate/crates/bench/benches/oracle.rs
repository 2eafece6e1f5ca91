//! Truncated-Fock oracle costs: Hamiltonian assembly, dense-exponential
//! evolution, and the full oracle-vs-analytic comparison, across cutoffs.

use criterion::{BenchmarkId, Criterion, criterion_group, criterion_main};
use std::hint::black_box;

use gravab_bench::bench_system;
use gravab_core::fock_oracle::{TruncatedState, build_hamiltonian, compare_with_analytic, evolve};

fn bench_build_hamiltonian(c: &mut Criterion) {
    let system = bench_system();
    let mut group = c.benchmark_group("build_hamiltonian");
    for n in [20usize, 40, 80, 160] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| build_hamiltonian(black_box(&system), n).unwrap());
        });
    }
    group.finish();
}

fn bench_evolve(c: &mut Criterion) {
    let system = bench_system();
    let mut group = c.benchmark_group("evolve");
    for n in [20usize, 40, 80] {
        let hamiltonian = build_hamiltonian(&system, n).unwrap();
        let state = TruncatedState::initial_superposition(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| evolve(black_box(&state), black_box(&hamiltonian), 3.0).unwrap());
        });
    }
    group.finish();
}

fn bench_compare_with_analytic(c: &mut Criterion) {
    let system = bench_system();
    c.bench_function("compare_with_analytic/N=40", |b| {
        b.iter(|| compare_with_analytic(black_box(&system), 3.0, 40).unwrap());
    });
}

criterion_group!(
    benches,
    bench_build_hamiltonian,
    bench_evolve,
    bench_compare_with_analytic
);
criterion_main!(benches);
