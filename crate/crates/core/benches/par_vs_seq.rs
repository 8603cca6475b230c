//! Parallel versus sequential execution of the corpus runners and the
//! brute-force obstruction oracle. Both modes are compiled in either
//! feature configuration; under `--no-default-features` the Auto mode
//! simply degenerates to sequential and the pairs should tie.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cogrowth::digraph::DEFAULT_LINE_BUDGET;
use cogrowth::verify::{
    run_good_path_corpus, run_lemma_evol_corpus, run_main_lemma_corpus, CorpusConfig,
};
use cogrowth::words::SequenceSpec;
use cogrowth::Exec;

fn modes() -> [(&'static str, Exec); 2] {
    [("auto", Exec::Auto), ("sequential", Exec::Sequential)]
}

fn bench_evol_corpus(c: &mut Criterion) {
    let cfg = CorpusConfig { seed: 2024, count: 60, max_vertices: 10 };
    let mut group = c.benchmark_group("evol_corpus");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_lemma_evol_corpus(&cfg, exec).unwrap());
        });
    }
    group.finish();
}

fn bench_main_lemma_corpus(c: &mut Criterion) {
    let cfg = CorpusConfig { seed: 2024, count: 8, max_vertices: 5 };
    let mut group = c.benchmark_group("main_lemma_corpus");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_main_lemma_corpus(&cfg, exec, DEFAULT_LINE_BUDGET).unwrap());
        });
    }
    group.finish();
}

fn bench_good_path_corpus(c: &mut Criterion) {
    let cfg = CorpusConfig { seed: 2024, count: 20, max_vertices: 6 };
    let mut group = c.benchmark_group("good_path_corpus");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_good_path_corpus(&cfg, exec).unwrap());
        });
    }
    group.finish();
}

fn bench_brute_force(c: &mut Criterion) {
    let spec = SequenceSpec::thue_morse();
    let mut group = c.benchmark_group("brute_force_obstructions");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                cogrowth::obstructions::brute_force_minimal_forbidden_exec(
                    &spec, 12, exec,
                )
                .unwrap()
            });
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_evol_corpus,
    bench_main_lemma_corpus,
    bench_good_path_corpus,
    bench_brute_force
);
criterion_main!(benches);
