use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use octachain::invariants::{full_report, kirchhoff_block_route, ResistanceMatrix};
use octachain::matrix::{char_poly, determinant, laplacian, normalized_similar};
use octachain_bench::fixture;

fn char_polys(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    group.sample_size(10);
    for n in [4, 10, 20] {
        let (g, b) = fixture(n);
        group.bench_with_input(BenchmarkId::new("normalized_full", n), &g, |bench, g| {
            let m = normalized_similar(g);
            bench.iter(|| char_poly(&m).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("l_a_block", n), &b, |bench, b| {
            bench.iter(|| char_poly(&b.l_a).unwrap())
        });
    }
    group.finish();
}

fn determinants(c: &mut Criterion) {
    let (g, _) = fixture(8);
    let grounded = laplacian(&g).without(0).unwrap();
    c.bench_function("bareiss_grounded_n8", |b| {
        b.iter(|| determinant(&grounded).unwrap())
    });
}

fn resistances(c: &mut Criterion) {
    let mut group = c.benchmark_group("resistance");
    group.sample_size(10);
    for n in [2, 6, 12] {
        let (g, b) = fixture(n);
        group.bench_with_input(BenchmarkId::new("matrix", n), &g, |bench, g| {
            bench.iter(|| ResistanceMatrix::new(g).unwrap())
        });
        group.bench_with_input(
            BenchmarkId::new("kf_blocks", n),
            &(g, b),
            |bench, (g, b)| bench.iter(|| kirchhoff_block_route(g, b).unwrap()),
        );
    }
    group.finish();
}

fn reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_report");
    group.sample_size(10);
    for n in [1, 4, 8] {
        let (g, _) = fixture(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |bench, g| {
            bench.iter(|| full_report(g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, char_polys, determinants, resistances, reports);
criterion_main!(benches);
