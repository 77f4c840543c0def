use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use expnet::expansivity::{expansion_frequency, expansion_time, is_expansive, is_expansive_linear};
use expnet::Caps;
use expnet_bench::{primitive, primitive_table, twisted, xor_hub};

fn refinement(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("is_expansive");
    for n in [8, 12, 16] {
        let f = primitive_table(n);
        group.bench_with_input(BenchmarkId::new("primitive", n), &f, |b, f| b.iter(|| is_expansive(f, &caps)));
    }
    let f = xor_hub(12);
    group.bench_function("xor_hub/12", |b| b.iter(|| is_expansive(&f, &caps)));
    group.finish();
}

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_criterion");
    for n in [8, 24, 32] {
        let f = primitive(n);
        let m = f.matrix().expect("linear").clone();
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| is_expansive_linear(black_box(m))));
    }
    group.finish();
}

fn metrics(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("metrics");
    group.sample_size(10);
    let f = twisted(3, 3);
    group.bench_function("expansion_time/twisted_3_3", |b| b.iter(|| expansion_time(&f, &caps)));
    let f = primitive(6);
    group.bench_function("expansion_frequency/primitive_6", |b| b.iter(|| expansion_frequency(&f, &caps)));
    group.finish();
}

criterion_group!(benches, refinement, determinant, metrics);
criterion_main!(benches);
