use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use sweepcover::count::{count_nonsingleton, p_count, p_table, stirling2};

fn bench_table(c: &mut Criterion) {
    c.bench_function("p_table delta 2..=9 n 1..=8", |b| {
        b.iter(|| p_table(black_box(2..=9), black_box(1..=8), 0).unwrap())
    });
}

fn bench_p_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("p_count");
    for delta in [3usize, 5, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(delta), &delta, |b, &d| {
            b.iter(|| p_count(d, 0, black_box(10)).unwrap())
        });
    }
    group.finish();
}

fn bench_numbers(c: &mut Criterion) {
    c.bench_function("stirling2(60, 20)", |b| {
        b.iter(|| stirling2(black_box(60), 20))
    });
    c.bench_function("count_nonsingleton(30, 8)", |b| {
        b.iter(|| count_nonsingleton(black_box(30), 8))
    });
}

criterion_group!(benches, bench_table, bench_p_count, bench_numbers);
criterion_main!(benches);
