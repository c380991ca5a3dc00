use criterion::{criterion_group, criterion_main, Criterion};
use vtcycle_core::circumference;
use vtcycle_core::cycles::{circumference_with, Pruning, SolverConfig};
use vtcycle_core::graph::{coxeter, petersen, truncate};

fn named_graphs(c: &mut Criterion) {
    let graphs = [
        ("petersen", petersen()),
        ("coxeter", coxeter()),
        ("truncated_petersen", truncate(&petersen()).unwrap()),
    ];
    let mut group = c.benchmark_group("circumference");
    for (name, g) in &graphs {
        group.bench_function(*name, |b| b.iter(|| circumference(g).unwrap()));
    }
    group.finish();
}

fn unpruned(c: &mut Criterion) {
    let g = coxeter();
    let config = SolverConfig { pruning: Pruning::None, time_limit: None };
    let mut group = c.benchmark_group("circumference_unpruned");
    group.sample_size(10);
    group.bench_function("coxeter", |b| b.iter(|| circumference_with(&g, &config).unwrap()));
    group.finish();
}

criterion_group!(benches, named_graphs, unpruned);
criterion_main!(benches);
