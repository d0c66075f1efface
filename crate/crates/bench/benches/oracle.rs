use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dplane_bench::CATALOG_CASES;
use dplane_core::catalog::{by_name, extract, verify_specialization};
use dplane_core::polyoracle::{default_guard, PrimeField, Quotient, Rational};
use std::hint::black_box;

fn saturation(c: &mut Criterion) {
    let mut group = c.benchmark_group("saturate");
    for name in CATALOG_CASES {
        let entry = by_name(name).unwrap();
        let top = entry.fit_degree();
        group.bench_with_input(BenchmarkId::from_parameter(name), &entry.ideal, |b, ideal| {
            b.iter(|| {
                let mut q = Quotient::<Rational>::new(ideal);
                black_box(q.saturate(top, default_guard(ideal)).unwrap())
            })
        });
    }
    group.finish();
}

fn extraction(c: &mut Criterion) {
    let mut group = c.benchmark_group("extract");
    for name in CATALOG_CASES {
        let entry = by_name(name).unwrap();
        let fit = entry.fit_degree();
        group.bench_with_input(BenchmarkId::new("exact", name), &entry.ideal, |b, ideal| {
            b.iter(|| black_box(extract(&mut Quotient::<Rational>::new(ideal), fit).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("prime", name), &entry.ideal, |b, ideal| {
            b.iter(|| black_box(extract(&mut Quotient::<PrimeField>::new(ideal), fit).unwrap()))
        });
    }
    group.finish();
}

fn specialization(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_specialization");
    group.sample_size(10);
    for (r, p) in [(0, 2), (1, 3), (3, 3)] {
        group.bench_function(format!("r={r},p={p}"), |b| {
            b.iter(|| black_box(verify_specialization(r, p).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, saturation, extraction, specialization);
criterion_main!(benches);
