use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sphrange::harmonics::sphere_quadrature;
use sphrange::range::{build_report, CheckConfig};
use sphrange::spectral::decompose;
use sphrange::transform::{forward, MeanRule};
use sphrange::{Dimension, Phantom};

fn pipeline(c: &mut Criterion) {
    let n = Dimension::Two;
    let phantom = Phantom::bump(n, [0.3, 0.0, 0.0], 0.4, 1.0).unwrap();
    let centers = sphere_quadrature(n, 64).unwrap();
    let rule = MeanRule::axial(n, 256).unwrap();
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    group.bench_function("forward res=64 T=513 axial", |b| {
        b.iter(|| forward(black_box(&phantom), &centers, 513, &rule).unwrap())
    });
    let grid = forward(&phantom, &centers, 513, &rule).unwrap();
    group.bench_function("decompose m_max=8", |b| b.iter(|| decompose(black_box(&grid), 8).unwrap()));
    let config = CheckConfig { m_max: 4, zeros: 10, ..Default::default() };
    group.bench_function("build_report m_max=4 K=10", |b| b.iter(|| build_report(black_box(&grid), &config).unwrap()));
    group.finish();
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
