use criterion::{criterion_group, criterion_main, Criterion};

use horadam_gf::gfengine::{build_delta, determinant, horadam_gf, series_coeffs};
use horadam_gf::horadam::{power_series_oracle, preset};

fn bench_determinant(c: &mut Criterion) {
    let pell = preset("pell").unwrap();
    let delta6 = build_delta(6, &pell).unwrap();
    c.bench_function("determinant/delta6_pell", |b| {
        b.iter(|| determinant(&delta6))
    });
    let delta8 = build_delta(8, &pell).unwrap();
    c.bench_function("determinant/delta8_pell", |b| {
        b.iter(|| determinant(&delta8))
    });
    let cheb = preset("chebyshev-u").unwrap();
    let delta4_t = build_delta(4, &cheb).unwrap();
    c.bench_function("determinant/delta4_chebyshev_symbolic", |b| {
        b.iter(|| determinant(&delta4_t))
    });
}

fn bench_gf(c: &mut Criterion) {
    let fib = preset("fibonacci").unwrap();
    c.bench_function("gf/fibonacci_k6", |b| b.iter(|| horadam_gf(6, &fib).unwrap()));
    let lucas = preset("lucas").unwrap();
    c.bench_function("gf/lucas_k8", |b| b.iter(|| horadam_gf(8, &lucas).unwrap()));
}

fn bench_series(c: &mut Criterion) {
    let fib = preset("fibonacci").unwrap();
    let gf = horadam_gf(4, &fib).unwrap();
    c.bench_function("series/fibonacci_k4_n64", |b| {
        b.iter(|| series_coeffs(&gf.reduced, 64).unwrap())
    });
    c.bench_function("oracle/fibonacci_k4_n64", |b| {
        b.iter(|| power_series_oracle(&fib, 4, 64))
    });
}

criterion_group!(benches, bench_determinant, bench_gf, bench_series);
criterion_main!(benches);
