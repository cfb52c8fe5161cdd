use catcodes_core::enumeration::rng_from_seed;
use catcodes_core::{
    ballot_table, enum_codes, exact_stats, monte_carlo_stats, rank_code, unrank_code,
    verify_family, BigUint, CodeRanker, CodeSampler, Family,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enum_codes");
    for n in [8usize, 10, 12] {
        let count = enum_codes(n).unwrap().len() as u64;
        group.throughput(Throughput::Elements(count));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enum_codes(black_box(n)).unwrap().len())
        });
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    c.bench_function("ballot_table/200", |b| {
        b.iter(|| ballot_table(black_box(200)))
    });
}

fn ranking(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    let codes = enum_codes(10).unwrap();
    group.throughput(Throughput::Elements(codes.len() as u64));
    group.bench_function("rank_code/10", |b| {
        b.iter(|| {
            for c in &codes {
                black_box(rank_code(c));
            }
        })
    });
    let ranker = CodeRanker::new(10);
    group.bench_function("ranker_rank/10", |b| {
        b.iter(|| {
            for c in &codes {
                black_box(ranker.rank(c).unwrap());
            }
        })
    });
    group.bench_function("unrank_code/10", |b| {
        b.iter(|| {
            for r in 0..codes.len() as u64 {
                black_box(unrank_code(10, &BigUint::from(r)).unwrap());
            }
        })
    });
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample");
    for n in [10usize, 100, 1000] {
        let sampler = CodeSampler::new(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            let mut rng = rng_from_seed(7);
            b.iter(|| sampler.sample(&mut rng))
        });
    }
    group.finish();
}

fn statistics(c: &mut Criterion) {
    c.bench_function("exact_stats/10", |b| {
        b.iter(|| exact_stats(black_box(10)).unwrap())
    });
    c.bench_function("monte_carlo_stats/20x10000", |b| {
        b.iter(|| monte_carlo_stats(20, 10_000, black_box(1)).unwrap())
    });
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for family in Family::ALL {
        group.bench_function(BenchmarkId::new(family.name(), 8), |b| {
            b.iter(|| verify_family(family, 8).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    enumeration,
    counting,
    ranking,
    sampling,
    statistics,
    verification
);
criterion_main!(benches);
