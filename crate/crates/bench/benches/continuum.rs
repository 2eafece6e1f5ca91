//! Continuum-side costs: the decoherence integral under both time factors,
//! the numeric mode-sum phase, and the combined report.

use criterion::{Criterion, criterion_group, criterion_main};
use std::hint::black_box;

use gravab_bench::bench_geometry;
use gravab_core::constants::{CutoffPreset, PhysicalConstants};
use gravab_core::continuum::{
    RB87_MASS_KG, ReportOptions, ab_phase_numeric, compute_report, entropy_integral,
};
use gravab_core::{ModeIntegralSpec, TimeFactor};

fn bench_entropy_integral(c: &mut Criterion) {
    let constants = PhysicalConstants::codata2018();
    let mut group = c.benchmark_group("entropy_integral");
    for (label, time_factor) in [("unity", TimeFactor::Unity), ("exact", TimeFactor::Exact)] {
        let spec = ModeIntegralSpec {
            time_factor,
            ..ModeIntegralSpec::from_preset(CutoffPreset::Codata, &constants)
        };
        group.bench_function(label, |b| {
            b.iter(|| {
                entropy_integral(black_box(0.1), &spec, 1.0, RB87_MASS_KG, &constants).unwrap()
            });
        });
    }
    group.finish();
}

fn bench_numeric_phase(c: &mut Criterion) {
    let constants = PhysicalConstants::codata2018();
    let geom = bench_geometry();
    let spec = ModeIntegralSpec::from_preset(CutoffPreset::PaperCutoff, &constants);
    c.bench_function("ab_phase_numeric", |b| {
        b.iter(|| ab_phase_numeric(black_box(&geom), &spec, &constants).unwrap());
    });
}

fn bench_compute_report(c: &mut Criterion) {
    let constants = PhysicalConstants::codata2018();
    let geom = bench_geometry();
    let spec = ModeIntegralSpec::from_preset(CutoffPreset::Codata, &constants);
    let mut group = c.benchmark_group("compute_report");
    group.bench_function("phases_and_entropy", |b| {
        b.iter(|| {
            compute_report(
                black_box(&geom),
                &spec,
                &constants,
                ReportOptions::default(),
            )
            .unwrap()
        });
    });
    group.bench_function("with_numeric_phase", |b| {
        let options = ReportOptions {
            include_numeric_phase: true,
            include_reference_estimates: false,
        };
        b.iter(|| compute_report(black_box(&geom), &spec, &constants, options).unwrap());
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_entropy_integral,
    bench_numeric_phase,
    bench_compute_report
);
criterion_main!(benches);
