use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use uberhom::coloured::horizontal_homology;
use uberhom::complex::Family;
use uberhom::graph::{connected_graphs, dissimilarity, h0_graph, theta};
use uberhom::uber::{uber_degree0_fast, uber_homology};
use uberhom::DEFAULT_CAP;
use uberhom_bench::{alternating, graph_fixtures, uber_fixtures};

fn horizontal(c: &mut Criterion) {
    let mut group = c.benchmark_group("horizontal");
    for n in [3, 4, 5, 6] {
        let x = Family::Simplex(n).build().unwrap();
        let eps = alternating(x.vertex_count());
        group.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| horizontal_homology(black_box(x), eps).unwrap())
        });
    }
    group.finish();
}

fn uber(c: &mut Criterion) {
    let mut group = c.benchmark_group("uber");
    group.sample_size(10);
    for (name, x) in uber_fixtures() {
        group.bench_with_input(BenchmarkId::new("cube", name), &x, |b, x| {
            b.iter(|| uber_homology(black_box(x)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("degree0_fast", name), &x, |b, x| {
            b.iter(|| uber_degree0_fast(black_box(x)))
        });
    }
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("graphs");
    for (name, g) in graph_fixtures() {
        group.bench_with_input(BenchmarkId::new("theta2", name), &g, |b, g| {
            b.iter(|| theta(black_box(g), 2).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("h0", name), &g, |b, g| {
            b.iter(|| h0_graph(black_box(g), DEFAULT_CAP).unwrap())
        });
    }
    let fixtures = graph_fixtures();
    group.bench_function("dissim_prism_k33", |b| {
        b.iter(|| dissimilarity(black_box(&fixtures[0].1), black_box(&fixtures[1].1)).unwrap())
    });
    group.sample_size(10);
    group.bench_function("enumerate_connected_7", |b| {
        b.iter(|| connected_graphs(black_box(7)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, horizontal, uber, graphs);
criterion_main!(benches);
