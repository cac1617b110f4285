use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use symsep_core::orbit::{orbit_maximize, Objective, OrbitSearchConfig};
use symsep_core::par::{map_range, Exec};
use symsep_core::rng::stream;
use symsep_core::three_qubit::{dicke_mixture_state, estimate_r_sas_3qubit};
use symsep_core::two_qubit::optimal_state;
use symsep_core::{Spectrum3, Spectrum4Sym};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn restarts(c: &mut Criterion) {
    let mut g = c.benchmark_group("orbit_maximize");
    g.sample_size(10);
    let two = optimal_state(&Spectrum3::new([0.5, 0.3, 0.2]).unwrap());
    let three = dicke_mixture_state(&Spectrum4Sym::new([0.4, 0.3, 0.2, 0.1]).unwrap());
    for (name, exec) in MODES {
        let cfg = OrbitSearchConfig {
            n_ascent_restarts: 8,
            max_ascent_iters: 2_000,
            exec,
            ..OrbitSearchConfig::default()
        };
        g.bench_with_input(BenchmarkId::new("two_qubit", name), &cfg, |b, cfg| {
            b.iter(|| orbit_maximize(&two, Objective::Negativity, cfg).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("three_qubit", name), &cfg, |b, cfg| {
            b.iter(|| orbit_maximize(&three, Objective::Negativity, cfg).unwrap())
        });
    }
    g.finish();
}

fn estimator(c: &mut Criterion) {
    let mut g = c.benchmark_group("estimate_r_sas_3qubit");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| estimate_r_sas_3qubit(1_000, 100, 7, exec).unwrap()));
    }
    g.finish();
}

fn closed_form_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectrum_scan");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                map_range(exec, 10_000, |i| {
                    let s = Spectrum3::random(&mut stream(3, i as u64));
                    symsep_core::measures::negativity_symmetric(&optimal_state(&s)).negativity
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, restarts, estimator, closed_form_scan);
criterion_main!(benches);
