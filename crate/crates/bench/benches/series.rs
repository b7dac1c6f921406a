use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use riordan::rational::ratio;
use riordan::series::{lagrange_coeffs, lagrange_solve};
use riordan_bench::{order_one_series, unit_series};

fn arithmetic(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for n in [20usize, 50, 100] {
        let f = unit_series(n);
        let g = order_one_series(n);
        group.bench_with_input(BenchmarkId::new("mul", n), &n, |b, _| {
            b.iter(|| black_box(&f * &f))
        });
        group.bench_with_input(BenchmarkId::new("div", n), &n, |b, _| {
            b.iter(|| f.div(black_box(&f)))
        });
        group.bench_with_input(BenchmarkId::new("compose", n), &n, |b, _| {
            b.iter(|| f.compose(black_box(&g)))
        });
        group.bench_with_input(BenchmarkId::new("revert", n), &n, |b, _| {
            b.iter(|| black_box(&g).revert())
        });
        group.bench_with_input(BenchmarkId::new("pow_rational", n), &n, |b, _| {
            b.iter(|| black_box(&f).pow_rational(&ratio(3, 7)))
        });
    }
    group.finish();
}

fn lagrange(c: &mut Criterion) {
    let mut group = c.benchmark_group("lagrange");
    let n = 40;
    let phi = unit_series(n);
    group.bench_function("solve", |b| b.iter(|| lagrange_solve(black_box(&phi), n)));
    group.bench_function("coeffs k=3", |b| {
        b.iter(|| lagrange_coeffs(black_box(&phi), 3, n))
    });
    group.finish();
}

criterion_group!(benches, arithmetic, lagrange);
criterion_main!(benches);
