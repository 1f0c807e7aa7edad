//! Exhaustive-enumeration throughput: rayon-sharded vs. single-threaded.
//! Run with `cargo bench --bench oracle`; with `--no-default-features` both
//! sides take the sequential path, which is the baseline to compare against.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use egal_orient::corpus;
use egal_orient::oracle::{self, Constraint, Objective, OracleQuery};
use egal_orient::UndirectedGraph;

fn bench_graph() -> UndirectedGraph {
    // K6 plus a pendant triangle: 18 edges, 262k orientations
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            edges.push((u, v));
        }
    }
    edges.extend([(5, 6), (6, 7), (7, 5)]);
    UndirectedGraph::new(8, edges).expect("bench edges are valid")
}

fn oracle_benches(c: &mut Criterion) {
    let g = bench_graph();
    let minlex = OracleQuery {
        constraint: Constraint::None,
        objective: Objective::MinLexSequence,
    };
    let sc_minmax = OracleQuery {
        constraint: Constraint::StronglyConnected,
        objective: Objective::MinMaxIndegree,
    };

    let mut group = c.benchmark_group("oracle_minlex_m18");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| oracle::solve(black_box(&g), black_box(&minlex)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| oracle::solve_sequential(black_box(&g), black_box(&minlex)).unwrap())
    });
    group.finish();

    let mut group = c.benchmark_group("oracle_sc_minmax_m18");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| oracle::solve(black_box(&g), black_box(&sc_minmax)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| oracle::solve_sequential(black_box(&g), black_box(&sc_minmax)).unwrap())
    });
    group.finish();

    // small sanity case so the bench also covers the bridged/infeasible path
    let path = corpus::path(4);
    let mut group = c.benchmark_group("oracle_infeasible_m3");
    group.bench_function("parallel", |b| {
        b.iter(|| oracle::solve(black_box(&path), black_box(&sc_minmax)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, oracle_benches);
criterion_main!(benches);
