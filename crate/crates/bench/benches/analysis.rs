use criterion::{criterion_group, criterion_main, Criterion};
use vtcycle_core::connectivity::{menger, vertex_connectivity, Endpoints};
use vtcycle_core::corpus::{coxeter_action, lift_to_truncation, petersen_s5_action};
use vtcycle_core::graph::{coxeter, petersen};
use vtcycle_core::{analyze, AnalysisConfig};

fn connectivity(c: &mut Criterion) {
    let g = coxeter();
    let (s, t): (Vec<usize>, Vec<usize>) = ((0..7).collect(), (21..28).collect());
    c.bench_function("menger/coxeter", |b| b.iter(|| menger(&g, &s, &t, Endpoints::Disjoint).unwrap()));
    c.bench_function("vertex_connectivity/coxeter", |b| b.iter(|| vertex_connectivity(&g)));
}

fn full_analysis(c: &mut Criterion) {
    let config = AnalysisConfig::default();
    let p = petersen();
    let pa = petersen_s5_action();
    let (tp, tpa) = lift_to_truncation(&p, &pa).unwrap();
    let cox = coxeter();
    let coxa = coxeter_action(&cox).unwrap();
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    group.bench_function("petersen", |b| b.iter(|| analyze(&p, Some(&pa), &config).unwrap()));
    group.bench_function("truncated_petersen", |b| b.iter(|| analyze(&tp, Some(&tpa), &config).unwrap()));
    group.bench_function("coxeter", |b| b.iter(|| analyze(&cox, Some(&coxa), &config).unwrap()));
    group.finish();
}

criterion_group!(benches, connectivity, full_analysis);
criterion_main!(benches);
