use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sallytype_bench::sample;
use sallytype_core::analysis::{self, Engine};
use sallytype_core::families::full_family;
use sallytype_core::semigroup::sally_semigroup;
use sallytype_core::groebner::Buchberger;
use sallytype_core::{classify, toric_oracle, Limits, MonomialOrder, VariableSet};

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for e in [8, 10, 12] {
        for p in sample(e) {
            let s = sally_semigroup(p);
            let vs = VariableSet::sally(p);
            g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, _| {
                b.iter(|| toric_oracle::defining_ideal(&s, &vs, Limits::default()).unwrap())
            });
        }
    }
    g.finish();
}

fn completion(c: &mut Criterion) {
    let mut g = c.benchmark_group("family_completion");
    for e in [10, 12, 14] {
        for p in sample(e) {
            let fam = full_family(p).unwrap();
            let gens = fam.all();
            g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, _| {
                b.iter(|| {
                    Buchberger::new(MonomialOrder::Grevlex, &fam.variables)
                        .run(&gens)
                        .unwrap()
                })
            });
        }
    }
    g.finish();
}

fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for p in sample(10) {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| {
            b.iter(|| classify(p, Engine::Family, Limits::default()).unwrap())
        });
    }
    let p = sample(10)[0];
    g.bench_function("regularity", |b| {
        b.iter(|| analysis::regularity(p, Engine::Family, Limits::default()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, oracle, completion, classification);
criterion_main!(benches);
