use criterion::{black_box, criterion_group, criterion_main, Criterion};

use polaron_core::{
    feynman_energy, feynman_minimize_default, gamma_ratio, ground_state_energy, i1_numeric,
    second_order_numeric, FeynmanParams, Tolerance,
};

fn bench_gamma_ratio(c: &mut Criterion) {
    c.bench_function("gamma_ratio z=7.07", |b| {
        b.iter(|| gamma_ratio(black_box(7.0685834705770347)).unwrap())
    });
    c.bench_function("gamma_ratio z=1e9", |b| {
        b.iter(|| gamma_ratio(black_box(1e9)).unwrap())
    });
}

fn bench_closed_forms(c: &mut Criterion) {
    c.bench_function("ground_state_energy alpha=1", |b| {
        b.iter(|| ground_state_energy(black_box(1.0)).unwrap())
    });
}

fn bench_oracles(c: &mut Criterion) {
    let tol = Tolerance::default();
    c.bench_function("i1_numeric alpha=1", |b| {
        b.iter(|| i1_numeric(black_box(1.0), &tol).unwrap())
    });
    c.bench_function("second_order_numeric alpha=0.1", |b| {
        b.iter(|| second_order_numeric(black_box(0.1), &tol).unwrap())
    });
}

fn bench_feynman(c: &mut Criterion) {
    let tol = Tolerance::default();
    let p = FeynmanParams::new(4.02, 2.13).unwrap();
    c.bench_function("feynman_energy alpha=5", |b| {
        b.iter(|| feynman_energy(black_box(5.0), &p, &tol).unwrap())
    });
    let mut group = c.benchmark_group("minimize");
    group.sample_size(10);
    group.bench_function("feynman_minimize alpha=5", |b| {
        b.iter(|| feynman_minimize_default(black_box(5.0)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_gamma_ratio, bench_closed_forms, bench_oracles, bench_feynman);
criterion_main!(benches);
