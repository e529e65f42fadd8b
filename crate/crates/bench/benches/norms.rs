use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use trigapprox::{modulus, sequence_norm, Multiplier, NormKind};
use trigapprox_bench::{dense_spectrum, graded_family, l2_family};

fn bench_norms(c: &mut Criterion) {
    let spec = dense_spectrum();
    let l2 = l2_family();
    let graded = graded_family();

    let mut g = c.benchmark_group("norm");
    g.bench_function("luxemburg/closed-form", |b| {
        b.iter(|| sequence_norm(black_box(&l2), black_box(&spec), NormKind::Luxemburg).unwrap())
    });
    g.bench_function("luxemburg/bisection", |b| {
        b.iter(|| sequence_norm(black_box(&graded), black_box(&spec), NormKind::Luxemburg).unwrap())
    });
    g.bench_function("orlicz/closed-form", |b| {
        b.iter(|| sequence_norm(black_box(&l2), black_box(&spec), NormKind::Orlicz).unwrap())
    });
    g.bench_function("orlicz/golden-section", |b| {
        b.iter(|| sequence_norm(black_box(&graded), black_box(&spec), NormKind::Orlicz).unwrap())
    });
    g.finish();
}

fn bench_modulus(c: &mut Criterion) {
    let spec = dense_spectrum();
    let l2 = l2_family();
    let phi = Multiplier::classical(1.0).unwrap();

    let mut g = c.benchmark_group("modulus");
    g.sample_size(20);
    for h_grid in [128usize, 512] {
        g.bench_function(format!("h_grid_{h_grid}"), |b| {
            b.iter(|| {
                modulus(
                    black_box(&l2),
                    black_box(&spec),
                    &phi,
                    std::f64::consts::PI / 8.0,
                    NormKind::Luxemburg,
                    h_grid,
                )
                .unwrap()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bench_norms, bench_modulus);
criterion_main!(benches);
