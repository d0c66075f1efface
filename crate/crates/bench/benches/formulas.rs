use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dplane_bench::formula_classes;
use dplane_core::cohomology::rao_function;
use dplane_core::profiles::{CurveModel, ProfileKind};
use dplane_core::scheme::{component_graph, components};
use dplane_core::selftest::scan_classes;
use std::hint::black_box;

fn rao(c: &mut Criterion) {
    let mut group = c.benchmark_group("rao_function");
    for (d, g) in formula_classes() {
        let models: Vec<CurveModel> = components(d, g)
            .into_iter()
            .filter_map(|t| CurveModel::with_kind(t, ProfileKind::Collinear).ok())
            .collect();
        group.bench_with_input(BenchmarkId::from_parameter(format!("{d},{g}")), &models, |b, models| {
            b.iter(|| {
                for m in models {
                    black_box(rao_function(m).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn scans(c: &mut Criterion) {
    c.bench_function("components_scan_d12_depth40", |b| {
        b.iter(|| {
            let mut n = 0;
            for (d, g) in scan_classes(12, 40) {
                n += components(d, g).len();
            }
            black_box(n)
        })
    });
    c.bench_function("component_graph_d12_depth40", |b| {
        b.iter(|| {
            scan_classes(12, 40)
                .into_iter()
                .all(|(d, g)| component_graph(d, g).is_connected())
        })
    });
}

criterion_group!(benches, rao, scans);
criterion_main!(benches);
