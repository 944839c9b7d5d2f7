use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use polymap_bench::truncated_hex_graph;
use polymap_core::transfer::{enumerate_paths, find_stuck, transferability, TransferDigraph};
use polymap_core::DEFAULT_STATE_BUDGET;

fn enumeration(c: &mut Criterion) {
    let graph = truncated_hex_graph(3, 3);
    let mut group = c.benchmark_group("enumerate_paths");
    for n in [6, 9, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_paths(black_box(&graph), n, DEFAULT_STATE_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn digraph(c: &mut Criterion) {
    let graph = truncated_hex_graph(3, 3);
    let mut group = c.benchmark_group("transfer_digraph");
    group.sample_size(10);
    for n in [9, 13] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| TransferDigraph::build(black_box(&graph), n, DEFAULT_STATE_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let graph = truncated_hex_graph(3, 3);
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("truncated_hex_3x3_to_13", |b| {
        b.iter(|| transferability(black_box(&graph), 13, DEFAULT_STATE_BUDGET))
    });
    group.finish();
}

fn stuck(c: &mut Criterion) {
    let graph = truncated_hex_graph(3, 3);
    c.bench_function("find_stuck_13", |b| {
        b.iter(|| find_stuck(black_box(&graph), 13, Some(0), u64::MAX).unwrap())
    });
}

criterion_group!(benches, enumeration, digraph, sweep, stuck);
criterion_main!(benches);
