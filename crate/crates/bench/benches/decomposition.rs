use criterion::{black_box, criterion_group, criterion_main, Criterion};
use oriented_ideal::{
    edge_ideal, fixtures, irreducible_decomposition_oracle, is_unmixed, strong_cover_decomposition,
    strong_cover_sets, Limits, WeightedOrientedGraph,
};

fn circulant(n: usize) -> WeightedOrientedGraph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).step_by(2).map(|i| (i, (i + 3) % n)));
    let weights: Vec<u32> = (0..n).map(|i| 1 + (i % 3) as u32).collect();
    WeightedOrientedGraph::from_indexed(&weights, &edges).unwrap()
}

fn decomposition(c: &mut Criterion) {
    let limits = Limits::default();
    let example1 = fixtures::example1();
    c.bench_function("decompose example1", |b| {
        b.iter(|| strong_cover_decomposition(black_box(&example1), false, &limits).unwrap())
    });
    c.bench_function("decompose example1 verified", |b| {
        b.iter(|| strong_cover_decomposition(black_box(&example1), true, &limits).unwrap())
    });
    let ideal = edge_ideal(&example1);
    c.bench_function("oracle example1", |b| {
        b.iter(|| {
            irreducible_decomposition_oracle(black_box(&ideal), limits.oracle_max_steps).unwrap()
        })
    });
    let eleven = fixtures::eleven_vertex();
    c.bench_function("unmixed eleven-vertex", |b| {
        b.iter(|| is_unmixed(black_box(&eleven), &limits).unwrap())
    });

    let mut group = c.benchmark_group("strong covers");
    for n in [8, 12, 16] {
        let g = circulant(n);
        group.bench_function(format!("circulant {n}"), |b| {
            b.iter(|| strong_cover_sets(black_box(&g), &limits).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, decomposition);
criterion_main!(benches);
