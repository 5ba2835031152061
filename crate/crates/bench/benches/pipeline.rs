use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use unimodal_core::cantor::{psi_value, OrderContext};
use unimodal_core::gluing::{apply_f, Samples};
use unimodal_core::scene::{betweenness_check, build_scene, verify_noncrossing, XMode};

fn ctx(l: &str, nu: &str) -> OrderContext {
    OrderContext::new(l.parse().unwrap(), nu.parse().unwrap()).unwrap()
}

fn scenes(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_scene");
    for (nu, depth) in [("1(0)", 8), ("1(0)", 10), ("(101)", 12)] {
        let k = ctx("(1).", nu);
        group.bench_with_input(BenchmarkId::new(nu, depth), &depth, |b, &d| {
            b.iter(|| build_scene(k.nu(), &k, d, XMode::SymbolicRank).unwrap())
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let k = ctx("(1).", "1(0)");
    let s = build_scene(k.nu(), &k, 9, XMode::NumericOrbit { slope: 2.0 }).unwrap();
    c.bench_function("verify_noncrossing/full_tent_9", |b| b.iter(|| verify_noncrossing(black_box(&s))));
    c.bench_function("betweenness/full_tent_9", |b| b.iter(|| betweenness_check(black_box(&s))));
}

fn gluing(c: &mut Criterion) {
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let k = ctx("(1).", "(101)");
    let s = build_scene(k.nu(), &k, 10, XMode::NumericOrbit { slope: golden }).unwrap();
    c.bench_function("apply_f/golden_10", |b| b.iter(|| apply_f(black_box(&s), 10, Samples::default()).unwrap()));
}

fn coordinates(c: &mut Criterion) {
    let k = ctx("(101).", "(101)");
    let t = "(011)0110101.".parse().unwrap();
    c.bench_function("psi_value/depth_60", |b| b.iter(|| psi_value(black_box(&t), &k, 60)));
}

criterion_group!(benches, scenes, verification, gluing, coordinates);
criterion_main!(benches);
