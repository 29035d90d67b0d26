use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use nakrf::classifier::rf_table;
use nakrf::cluster::bruteforce_with;
use nakrf::polygon::{enumerate_angulations, invariant_angulation_in};
use nakrf::{NakAlgebra, NakEngine, PolygonCtx};
use nakrf_bench::{brute_grid, warm_engine};

fn formula(c: &mut Criterion) {
    c.bench_function("formula/table_40x8x8", |b| {
        b.iter(|| rf_table(black_box(40), 8, 8).unwrap())
    });
}

fn brute_force(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_force");
    g.sample_size(10);
    for (n, l, d) in [(4, 3, 3), (6, 4, 5), (6, 5, 3)] {
        let engine = warm_engine(n, l);
        g.bench_with_input(
            BenchmarkId::new("search", format!("{n}_{l}_{d}")),
            &d,
            |b, &d| b.iter(|| bruteforce_with(&engine, d).unwrap()),
        );
    }
    g.bench_function("cold_grid", |b| {
        b.iter(|| {
            for (n, l) in brute_grid() {
                let engine = NakEngine::new(NakAlgebra::new(n, l).unwrap());
                for d in 1..=5 {
                    black_box(bruteforce_with(&engine, d).unwrap());
                }
            }
        })
    });
    g.finish();
}

fn polygon(c: &mut Criterion) {
    let mut g = c.benchmark_group("polygon");
    g.sample_size(10);
    for (d, l) in [(2, 8), (3, 6), (2, 12)] {
        let ctx = PolygonCtx::new(d, l).unwrap();
        g.bench_with_input(
            BenchmarkId::new("enumerate", format!("{d}_{l}")),
            &ctx,
            |b, ctx| b.iter(|| enumerate_angulations(ctx)),
        );
    }
    let ctx = PolygonCtx::new(2, 12).unwrap();
    let all = enumerate_angulations(&ctx);
    g.bench_function("invariant_scan_2_12", |b| {
        b.iter(|| {
            (1..=12)
                .filter(|&n| invariant_angulation_in(&ctx, &all, n).0)
                .count()
        })
    });
    g.finish();
}

criterion_group!(benches, formula, brute_force, polygon);
criterion_main!(benches);
