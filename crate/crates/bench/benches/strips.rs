use clstrata::cl_structures::catalog_entry;
use clstrata::realizability::{decide, oracle, KnownBad};
use clstrata::ribbon::boundary_count;
use clstrata::{classify, enumerate_strips, EdgeSet, Generators};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn entry(name: &str) -> clstrata::RibbonStructure {
    catalog_entry(name).expect("bundled entry").structure
}

fn boundary(c: &mut Criterion) {
    let p = entry("petersen");
    let m = p.graph.m();
    c.bench_function("boundary_count/petersen/1024 twist vectors", |b| {
        b.iter(|| (0..1024u64).map(|t| boundary_count(&p.rotation, EdgeSet(t << (m - 10)))).sum::<usize>())
    });
}

fn strips(c: &mut Criterion) {
    let k33 = entry("cubic4-k33");
    c.bench_function("enumerate_strips/k33", |b| b.iter(|| enumerate_strips(&k33.graph, &k33.rotation).unwrap()));
    c.bench_function("classify/k33/all generators", |b| {
        b.iter(|| classify("k33", &k33.graph, &k33.rotation, Generators::ALL).unwrap())
    });
}

fn realizability(c: &mut Criterion) {
    let p = entry("petersen").graph;
    let prism = entry("cubic4-prism").graph;
    let kb = KnownBad::seeded();
    c.bench_function("decide/petersen", |b| b.iter(|| decide(black_box(&p), &kb).unwrap()));
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("prism", |b| b.iter(|| oracle(black_box(&prism)).unwrap()));
    g.finish();
}

criterion_group!(benches, boundary, strips, realizability);
criterion_main!(benches);
