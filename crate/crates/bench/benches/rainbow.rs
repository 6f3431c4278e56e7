use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbow_bench::{cycle_lex_path, cycle_square, solver_cases};
use rainbow_core::{is_k_rainbow_with, rx_exact, sdiam3, CheckConfig, SolveOptions};
use std::hint::black_box;

fn checker(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_k_rainbow");
    group.sample_size(10);
    let cases = [("C5xC5", cycle_square(5)), ("C6xC6", cycle_square(6)), ("C6[P3]", cycle_lex_path(6))];
    for (name, (g, col)) in &cases {
        for parallel in [false, true] {
            let cfg = CheckConfig { parallel, ..CheckConfig::default() };
            let id = BenchmarkId::new(if parallel { "parallel" } else { "sequential" }, name);
            group.bench_with_input(id, &(g, col), |b, (g, col)| {
                b.iter(|| assert!(is_k_rainbow_with(g, col, 3, &cfg).unwrap().is_ok()))
            });
        }
    }
    group.finish();
}

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("rx_exact");
    group.sample_size(10);
    for (name, g) in solver_cases() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| black_box(rx_exact(g, 3, &SolveOptions::default()).unwrap().value()))
        });
    }
    group.finish();
}

fn steiner(c: &mut Criterion) {
    let (g, _) = cycle_square(6);
    c.bench_function("sdiam3/C6xC6", |b| b.iter(|| black_box(sdiam3(&g).unwrap())));
}

criterion_group!(benches, checker, solver, steiner);
criterion_main!(benches);
