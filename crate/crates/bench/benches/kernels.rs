use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use tetraspeed_bench::{power_of_ten, PROFILE_BASES};
use tetraspeed_core::{
    congruence_speed, lambda_chain, speed_profile, tetrate_exact, tetrate_mod, Budget, TowerConfig,
    DEFAULT_DIGIT_BUDGET,
};

fn modular_tower(c: &mut Criterion) {
    let config = TowerConfig::default();
    let a = BigUint::from(807u32);
    let height = power_of_ten(100);
    let mut group = c.benchmark_group("tetrate_mod");
    group.sample_size(10);
    for digits in [30u64, 100, 300] {
        group.bench_with_input(BenchmarkId::new("807^^10^100", digits), &digits, |bench, &n| {
            bench.iter(|| tetrate_mod(black_box(&a), black_box(&height), n, &config).unwrap())
        });
    }
    let shallow = BigUint::from(3u32);
    group.bench_function(BenchmarkId::new("807^^3", 3000), |bench| {
        bench.iter(|| tetrate_mod(black_box(&a), black_box(&shallow), 3000, &config).unwrap())
    });
    group.finish();
}

fn chains(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda_chain");
    for n in [30u64, 1000, 100_000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| lambda_chain(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn profiles(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("speed_profile");
    group.sample_size(20);
    for a in PROFILE_BASES {
        group.bench_with_input(BenchmarkId::from_parameter(a), &a, |bench, &a| {
            bench.iter(|| speed_profile(black_box(a), 1u32, 8, &budget).unwrap())
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("tetrate_exact 300^^2", |bench| {
        bench.iter(|| tetrate_exact(black_box(300u32), 2u32, DEFAULT_DIGIT_BUDGET).unwrap())
    });
    c.bench_function("speed 300^^3 symbolic", |bench| {
        bench.iter(|| congruence_speed(black_box(300u32), 3u32, &budget).unwrap())
    });
}

criterion_group!(benches, modular_tower, chains, profiles, exact);
criterion_main!(benches);
