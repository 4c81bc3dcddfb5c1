use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use safeset_bench::random_connected;
use safeset_core::contraction::DEFAULT_BUDGET;
use safeset_core::enumerate::{enumerate_up_to, GraphFilter};
use safeset_core::solver::all_minimum_safe_sets;
use safeset_core::witness::random_weights;
use safeset_core::{certify_non_membership, classify, connected_safe_number, safe_number, Graph};

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solver");
    for n in [8, 12, 16, 20] {
        let g = random_connected(n, 25, n as u64);
        let w = random_weights(n, 1);
        group.bench_with_input(BenchmarkId::new("s", n), &(&g, &w), |b, (g, w)| b.iter(|| safe_number(g, w)));
        group
            .bench_with_input(BenchmarkId::new("cs", n), &(&g, &w), |b, (g, w)| b.iter(|| connected_safe_number(g, w)));
        if n <= 12 {
            group.bench_with_input(BenchmarkId::new("all_optima", n), &(&g, &w), |b, (g, w)| {
                b.iter(|| all_minimum_safe_sets(g, w))
            });
        }
    }
    group.finish();
}

fn witnesses(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness");
    let cases = [
        ("path9", Graph::path(9)),
        ("k2_5", Graph::complete_bipartite(2, 5)),
        ("random10", random_connected(10, 20, 3)),
    ];
    for (name, g) in &cases {
        group.bench_function(*name, |b| b.iter(|| certify_non_membership(black_box(g), DEFAULT_BUDGET)));
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for filter in [GraphFilter::Bipartite, GraphFilter::Chordal] {
        group.bench_function(format!("enumerate_{filter}_7"), |b| b.iter(|| enumerate_up_to(7, filter)));
    }
    let graphs: Vec<Graph> = enumerate_up_to(7, GraphFilter::Bipartite).unwrap().into_iter().flatten().collect();
    group.bench_function("classify_bipartite_7", |b| {
        b.iter(|| graphs.iter().map(|g| classify(g).unwrap().verdict).collect::<Vec<_>>())
    });
    group.finish();
}

criterion_group!(benches, solver, witnesses, sweeps);
criterion_main!(benches);
