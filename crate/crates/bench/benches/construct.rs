use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use lightspan::blackbox::{greedy_spanner, weighted_spanner};
use lightspan::{build_mst, construct, run_stream, verify_stretch, Params, Variant};
use lightspan_perf::sweep_graph;

fn params(variant: Variant) -> Params {
    Params { k: 3, q: 2.0, rho: 2.0, variant, seed: 0 }
}

fn lightsp(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    group.sample_size(20);
    for e in [10u32, 11, 12, 13] {
        let g = sweep_graph(1 << e, 8, 0);
        group.throughput(Throughput::Elements(g.m() as u64));
        for variant in [Variant::Basic, Variant::Unweighted] {
            group.bench_with_input(BenchmarkId::new(variant.name(), 1usize << e), &g, |b, g| {
                b.iter(|| construct(black_box(g), &params(variant)).unwrap())
            });
        }
    }
    group.finish();
}

fn stream(c: &mut Criterion) {
    let mut group = c.benchmark_group("stream");
    group.sample_size(20);
    for e in [10u32, 12] {
        let g = sweep_graph(1 << e, 8, 0);
        group.throughput(Throughput::Elements(g.m() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(1usize << e), &g, |b, g| {
            b.iter(|| run_stream(black_box(g), &params(Variant::Basic)).unwrap())
        });
    }
    group.finish();
}

fn baselines(c: &mut Criterion) {
    let mut group = c.benchmark_group("baselines");
    group.sample_size(10);
    let g = sweep_graph(1 << 10, 8, 0);
    group.bench_function("mst/1024", |b| b.iter(|| build_mst(black_box(&g)).unwrap()));
    group.bench_function("weighted_spanner/1024", |b| b.iter(|| weighted_spanner(black_box(&g), 3, 0)));
    group.bench_function("greedy/1024", |b| b.iter(|| greedy_spanner(black_box(&g), 11.0)));
    let h = construct(&g, &params(Variant::Basic)).unwrap().edges;
    group.bench_function("verify/1024", |b| b.iter(|| verify_stretch(black_box(&g), &h, 11.0)));
    group.finish();
}

criterion_group!(benches, lightsp, stream, baselines);
criterion_main!(benches);
