use criterion::{criterion_group, criterion_main, Criterion};

use bh_core::oracle::{campaign_exhaustive_bh2, campaign_random_bh3, suite_ham_bh2, Execution};

fn modes() -> [(&'static str, Execution); 2] {
    [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel(0)),
    ]
}

fn exhaustive_bh2(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_bh2");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| campaign_exhaustive_bh2(exec).unwrap()));
    }
    group.finish();
}

fn random_bh3(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_bh3_1000");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| campaign_random_bh3(1000, 42, exec).unwrap())
        });
    }
    group.finish();
}

fn laceability_bh2(c: &mut Criterion) {
    let mut group = c.benchmark_group("laceability_bh2");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| suite_ham_bh2(exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, exhaustive_bh2, random_bh3, laceability_bh2);
criterion_main!(benches);
