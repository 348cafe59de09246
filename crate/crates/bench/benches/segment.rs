use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use flagpath::audit::{run_audit, AuditOptions, PairSelection};
use flagpath::graph::{dual_diameter, is_normal};
use flagpath::segment::{segment_between_facets_with, SegmentOptions};
use flagpath_bench::{build, fixtures};

fn segments(c: &mut Criterion) {
    let mut group = c.benchmark_group("segment_between_facets");
    let opts = SegmentOptions { precheck: false };
    for (name, complex) in fixtures() {
        let fs = complex.facets();
        let (x, y) = (&fs[0], &fs[fs.len() - 1]);
        group.bench_with_input(BenchmarkId::from_parameter(name), &complex, |b, k| {
            b.iter(|| segment_between_facets_with(k, black_box(x), black_box(y), opts).unwrap())
        });
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for (name, complex) in fixtures() {
        group.bench_with_input(BenchmarkId::new("is_flag", name), &complex, |b, k| b.iter(|| k.is_flag()));
        group.bench_with_input(BenchmarkId::new("is_normal", name), &complex, |b, k| b.iter(|| is_normal(k)));
        group.bench_with_input(BenchmarkId::new("dual_diameter", name), &complex, |b, k| {
            b.iter(|| dual_diameter(k).unwrap())
        });
    }
    group.finish();
}

fn audit(c: &mut Criterion) {
    let complex = build("sd(simplexbd:4)");
    let opts = AuditOptions {
        pairs: PairSelection::Sample { count: 500, seed: 1 },
        jobs: None,
    };
    c.bench_function("audit_sample_500/sd(simplexbd:4)", |b| b.iter(|| run_audit("sd(simplexbd:4)", &complex, &opts)));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = segments, structure, audit
}
criterion_main!(benches);
