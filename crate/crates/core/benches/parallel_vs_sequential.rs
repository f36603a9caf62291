use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ncweyl::exec::Execution;
use ncweyl::fock::{numeric_checks, realize, FockConfig, Params, Route};
use ncweyl::relations::maps::oscillator_hamiltonian;
use ncweyl::relations::run_catalog;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| run_catalog(None, exec)));
    }
    g.finish();
}

fn realization(c: &mut Criterion) {
    let h = oscillator_hamiltonian();
    let mut g = c.benchmark_group("realize_hamiltonian");
    g.sample_size(10);
    for n in [20usize, 40] {
        let cfg = FockConfig::new(n, 2, Params::default()).unwrap();
        for (name, exec) in MODES {
            let cfg = cfg.with_exec(exec);
            g.bench_with_input(BenchmarkId::new(name, n), &cfg, |b, cfg| b.iter(|| realize(&h, cfg, Route::Bopp).unwrap()));
        }
    }
    g.finish();
}

fn shadows(c: &mut Criterion) {
    let mut g = c.benchmark_group("numeric_checks");
    g.sample_size(10);
    let cfg = FockConfig::new(12, 2, Params::default()).unwrap();
    for (name, exec) in MODES {
        let cfg = cfg.with_exec(exec);
        g.bench_function(name, |b| b.iter(|| numeric_checks(&cfg)));
    }
    g.finish();
}

criterion_group!(benches, catalog, realization, shadows);
criterion_main!(benches);
