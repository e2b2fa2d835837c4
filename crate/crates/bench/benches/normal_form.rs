use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use uqsl2_bench::{alternating_word, family_pair};
use uqsl2_core::{deformed_commutator, normal_form, psi, RelationMode, Sign};

fn bench_normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for len in [3usize, 5, 7] {
        let word = alternating_word(len);
        group.bench_with_input(BenchmarkId::new("strict", len), &word, |b, w| {
            b.iter(|| normal_form(black_box(w), RelationMode::Strict))
        });
    }
    group.finish();
}

fn bench_family_bracket(c: &mut Criterion) {
    let (a, b) = family_pair(Sign::Plus, 1, 3, 1, -1);
    c.bench_function("family_bracket_ep_1_3", |bench| {
        bench.iter(|| deformed_commutator(black_box(&a), black_box(&b), -1, RelationMode::AbelianX))
    });
}

fn bench_currents(c: &mut Criterion) {
    c.bench_function("psi_8", |b| b.iter(|| psi(black_box(8))));
}

criterion_group!(benches, bench_normal_form, bench_family_bracket, bench_currents);
criterion_main!(benches);
