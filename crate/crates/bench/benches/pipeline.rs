use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use quasiforest::linres::{betti_from_numerator, hilbert_from_decomposition};
use quasiforest::simplicial::flag_complex;
use quasiforest::{classify, hochster_betti, is_chordal, parse_graph6, to_graph6};
use quasiforest_bench::{complete_bipartite, labeled, two_linear};

fn graph6(c: &mut Criterion) {
    let graphs = labeled(6);
    let encoded: Vec<String> = graphs.iter().map(|g| to_graph6(g).unwrap()).collect();
    let mut group = c.benchmark_group("graph6");
    group.throughput(Throughput::Elements(graphs.len() as u64));
    group.bench_function("encode n=6", |b| {
        b.iter(|| graphs.iter().map(|g| to_graph6(black_box(g)).unwrap().len()).sum::<usize>())
    });
    group.bench_function("decode n=6", |b| {
        b.iter(|| encoded.iter().map(|s| parse_graph6(black_box(s.as_bytes())).unwrap().n()).sum::<usize>())
    });
    group.finish();
}

fn chordality(c: &mut Criterion) {
    let graphs = labeled(6);
    let mut group = c.benchmark_group("chordality");
    group.throughput(Throughput::Elements(graphs.len() as u64));
    group.bench_function("complements n=6", |b| {
        b.iter(|| graphs.iter().filter(|g| is_chordal(&black_box(g).complement()).is_chordal()).count())
    });
    group.finish();
}

fn classify_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    for n in [5, 6] {
        let graphs = labeled(n);
        group.throughput(Throughput::Elements(graphs.len() as u64));
        group.bench_with_input(BenchmarkId::new("all labeled", n), &graphs, |b, graphs| {
            b.iter(|| graphs.iter().filter(|g| classify(black_box(g)).unwrap().holds == Some(false)).count())
        });
    }
    group.finish();
}

/// Closed form against Hochster's formula on the same complexes.
fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    group.sample_size(10);
    let graphs = two_linear(5);
    group.throughput(Throughput::Elements(graphs.len() as u64));
    group.bench_function("formula n=5", |b| {
        b.iter(|| {
            for g in &graphs {
                let q = classify(black_box(g)).unwrap().decomposition.unwrap();
                black_box(betti_from_numerator(&hilbert_from_decomposition(&q).unwrap()).unwrap());
            }
        })
    });
    group.bench_function("hochster n=5", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(hochster_betti(&flag_complex(&black_box(g).complement())).unwrap());
            }
        })
    });
    for r in [3, 4, 5] {
        let g = complete_bipartite(r);
        let complex = flag_complex(&g.complement());
        group.bench_with_input(BenchmarkId::new("hochster K_{r,r}", r), &complex, |b, complex| {
            b.iter(|| hochster_betti(black_box(complex)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, graph6, chordality, classify_all, betti);
criterion_main!(benches);
