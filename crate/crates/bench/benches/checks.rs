use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dialgebra::cohomology::{cohomology_dims, BiHomModule};
use dialgebra::derivation::derivation_space;
use dialgebra::{check_axioms, Q};
use dialgebra_bench::{corpus_fixtures, matrix_fixtures};

fn axioms(c: &mut Criterion) {
    let corpus = corpus_fixtures();
    c.bench_function("check_axioms/corpus", |b| {
        b.iter(|| corpus.iter().filter(|(_, d)| check_axioms(d).passed()).count())
    });
    let mut g = c.benchmark_group("check_axioms/matrix");
    for (k, d) in matrix_fixtures(&[2, 3, 4]) {
        g.bench_with_input(BenchmarkId::from_parameter(k), &d, |b, d| b.iter(|| check_axioms(d)));
    }
    g.finish();
}

fn cohomology(c: &mut Criterion) {
    let corpus = corpus_fixtures();
    let m = BiHomModule::<Q>::trivial(1);
    let mut g = c.benchmark_group("cohomology_dims");
    g.sample_size(10);
    for (id, d) in corpus.iter().filter(|(id, _)| matches!(*id, "dim2/Alg3" | "dim3/Alg3" | "dim4/Alg1")) {
        g.bench_with_input(BenchmarkId::from_parameter(id), d, |b, d| b.iter(|| cohomology_dims(d, &m)));
    }
    g.finish();
}

fn derivations(c: &mut Criterion) {
    let mut g = c.benchmark_group("derivation_space");
    g.sample_size(10);
    for (k, d) in matrix_fixtures(&[2, 3]) {
        g.bench_with_input(BenchmarkId::from_parameter(k), &d, |b, d| b.iter(|| derivation_space(d, 0, 0)));
    }
    g.finish();
}

criterion_group!(benches, axioms, cohomology, derivations);
criterion_main!(benches);
