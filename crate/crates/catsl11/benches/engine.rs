//! Parallel vs sequential engine.
//!
//! With the default `parallel` feature each workload runs twice: on the global
//! rayon pool and inside a one-thread pool. Build with `--no-default-features`
//! for the plain sequential fallback; the group names carry the mode so
//! criterion baselines from both builds can be compared.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use catsl11::suites::{self, BimodWhich};
use catsl11::zoo::Which;

type Workload = (&'static str, fn());

const WORKLOADS: [Workload; 5] = [
    ("decat n=3", || drop(suites::decat(3).unwrap())),
    ("bimodule C_3", || drop(suites::bimodule(BimodWhich::Cn, 3).unwrap())),
    ("algebra A⊠R_3", || drop(suites::algebra(Which::AxRn, 3).unwrap())),
    ("rook n=5", || drop(suites::rook(5, 0).unwrap())),
    ("rep n=6", || drop(suites::rep(6).unwrap())),
];

fn engine(c: &mut Criterion) {
    let mut g = c.benchmark_group("engine");
    g.sample_size(10);
    for (name, f) in WORKLOADS {
        #[cfg(feature = "parallel")]
        {
            g.bench_function(BenchmarkId::new("parallel", name), |b| b.iter(f));
            let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
            g.bench_function(BenchmarkId::new("one-thread", name), |b| b.iter(|| one.install(f)));
        }
        #[cfg(not(feature = "parallel"))]
        g.bench_function(BenchmarkId::new("sequential", name), |b| b.iter(f));
    }
    g.finish();
}

criterion_group!(benches, engine);
criterion_main!(benches);
