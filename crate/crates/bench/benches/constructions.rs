use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use globcat::fincat::are_equivalent_bruteforce;
use globcat::fusion::{equivalence_fusion, fuse_to_span, span_to_equivalence};
use globcat::limits::{check_transfer, pullback_globular};
use globcat_bench::{cospans, equivalences, search_pairs};

fn pullbacks(c: &mut Criterion) {
    let mut group = c.benchmark_group("pullback");
    for dim in [1, 2, 3] {
        let cases = cospans(1, 32, dim, 5);
        group.bench_with_input(BenchmarkId::new("construct", dim), &cases, |b, cases| {
            b.iter(|| {
                cases
                    .iter()
                    .map(|(f, g)| pullback_globular(f, g).unwrap().apex.len(0))
                    .sum::<usize>()
            })
        });
        group.bench_with_input(BenchmarkId::new("transfer", dim), &cases, |b, cases| {
            b.iter(|| {
                cases
                    .iter()
                    .filter(|(f, g)| check_transfer(f, g).unwrap().holds())
                    .count()
            })
        });
    }
    group.finish();
}

fn fusion(c: &mut Criterion) {
    let corpus = equivalences(2, 16);
    c.bench_function("fusion/construct", |b| {
        b.iter(|| {
            corpus
                .iter()
                .map(|e| equivalence_fusion(black_box(e)).category().num_morphisms())
                .sum::<usize>()
        })
    });
    c.bench_function("fusion/round_trip", |b| {
        b.iter(|| {
            corpus
                .iter()
                .filter(|e| span_to_equivalence(&fuse_to_span(e).1).is_ok())
                .count()
        })
    });
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("equiv_search");
    for (name, a, b) in search_pairs() {
        group.bench_function(name, |bench| {
            bench.iter(|| are_equivalent_bruteforce(&a, &b).unwrap().is_some())
        });
    }
    group.finish();
}

criterion_group!(benches, pullbacks, fusion, search);
criterion_main!(benches);
