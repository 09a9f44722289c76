use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wmfock_core::fock::moment_via_fock;
use wmfock_core::moments::{moment_polynomial, moments_general};
use wmfock_core::partitions::{count_nc2wmo, EnumerationBound};
use wmfock_core::transforms::{density_curve, endpoint_bounds_check, moment_quadrature};

fn moments(c: &mut Criterion) {
    let mut g = c.benchmark_group("moments_general");
    for (m, n) in [(2, 20), (10, 20), (10, 60)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("m{m}_n{n}")), &(m, n), |b, &(m, n)| {
            b.iter(|| moments_general(black_box(m), black_box(n)).unwrap())
        });
    }
    g.finish();
    c.bench_function("moment_polynomial/n10", |b| b.iter(|| moment_polynomial(black_box(10)).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_nc2wmo");
    g.sample_size(20);
    for n in [4, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| count_nc2wmo(3, black_box(n), EnumerationBound::default()).unwrap())
        });
    }
    g.finish();
}

fn fock(c: &mut Criterion) {
    let mut g = c.benchmark_group("moment_via_fock");
    g.sample_size(20);
    for n in [3, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| moment_via_fock(3, black_box(n), 10).unwrap())
        });
    }
    g.finish();
}

fn transforms(c: &mut Criterion) {
    let mut g = c.benchmark_group("transforms");
    g.sample_size(10);
    g.bench_function("density_curve/m5_201", |b| b.iter(|| density_curve(5, -4.0, 4.0, black_box(201)).unwrap()));
    g.bench_function("moment_quadrature/m3", |b| b.iter(|| moment_quadrature(black_box(3), 6).unwrap()));
    g.bench_function("endpoint_bounds/10^4", |b| b.iter(|| endpoint_bounds_check(black_box(10_000)).unwrap()));
    g.finish();
}

criterion_group!(benches, moments, enumeration, fock, transforms);
criterion_main!(benches);
