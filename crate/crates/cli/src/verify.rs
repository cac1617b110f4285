//! Property suites with a machine-readable report.

use std::str::FromStr;

use serde::Serialize;

use symsep_core::linalg::{haar_random_unitary, min_eigenvalue};
use symsep_core::measures::{concurrence, negativity, pt_lambda_min_symmetric};
use symsep_core::orbit::{orbit_maximize, orbit_sample_max, Objective, OrbitSearchConfig};
use symsep_core::par::{map_range, Exec};
use symsep_core::rng::{derive_seed, seeded};
use symsep_core::symmetric::{embed_full, partial_transpose};
use symsep_core::three_qubit::{
    ball_radii_3qubit, counterexample_state, dicke_mixture_state, estimate_r_sas_3qubit, lambda_min_obs1,
    not_sas_3qubit, obs1_margin, r_obs1_extrema, COUNTEREXAMPLE_SPECTRUM,
};
use symsep_core::two_qubit::{
    ball_radii_2qubit, is_sas, johnston_as, max_concurrence_su3, max_negativity_su3, max_negativity_su4,
    min_critical_value, optimal_state, r_sas_lower_bound, sas_boundary_extrema,
};
use symsep_core::{Spectrum3, Spectrum4, Spectrum4Sym};

use crate::error::CliError;
use crate::radii::estimate_budget;
use crate::Scale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    #[serde(rename = "appendixA")]
    AppendixA,
    Obs1,
    Concurrence,
    Sas,
    Radii,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["theorem1", "appendixA", "obs1", "concurrence", "sas", "radii", "all"];

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Theorem1,
                Suite::AppendixA,
                Suite::Obs1,
                Suite::Concurrence,
                Suite::Sas,
                Suite::Radii,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "theorem1" => Suite::Theorem1,
            "appendixA" | "appendixa" => Suite::AppendixA,
            "obs1" => Suite::Obs1,
            "concurrence" => Suite::Concurrence,
            "sas" => Suite::Sas,
            "radii" => Suite::Radii,
            "all" => Suite::All,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Worst measured deviation (or count, for counting checks).
    pub measured: f64,
    pub tolerance: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub scale: Scale,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Ctx {
    seed: u64,
    full: bool,
    exec: Exec,
}

impl Ctx {
    fn n(&self, quick: usize, full: usize) -> usize {
        if self.full {
            full
        } else {
            quick
        }
    }

    fn spectra3(&self, salt: u64, n: usize) -> Vec<Spectrum3> {
        let mut rng = seeded(derive_seed(self.seed, salt));
        (0..n).map(|_| Spectrum3::random(&mut rng)).collect()
    }

    fn spectra4(&self, salt: u64, n: usize) -> Vec<Spectrum4Sym> {
        let mut rng = seeded(derive_seed(self.seed, salt));
        (0..n).map(|_| Spectrum4Sym::random(&mut rng)).collect()
    }

    /// Worst of `f` over `n` items, evaluated with the configured executor.
    fn worst<T: Sync>(&self, items: &[T], f: impl Fn(usize, &T) -> f64 + Sync + Send) -> f64 {
        map_range(self.exec, items.len(), |i| f(i, &items[i]))
            .into_iter()
            .fold(0.0, f64::max)
    }
}

fn check(suite: Suite, name: &str, measured: f64, tolerance: f64, samples: usize) -> Check {
    Check {
        suite,
        name: name.to_owned(),
        passed: measured <= tolerance,
        measured,
        tolerance,
        samples,
    }
}

/// Worst shortfall and worst excess of orbit search against a closed form.
fn oracle(ctx: &Ctx, objective: Objective, closed: fn(&Spectrum3) -> f64, spectra: &[Spectrum3], salt: u64) -> (f64, f64) {
    let results = map_range(ctx.exec, spectra.len(), |i| {
        let s = &spectra[i];
        let start = haar_random_unitary(3, &mut seeded(derive_seed(ctx.seed ^ salt, i as u64))).unwrap();
        let rho = optimal_state(s).evolved(&start);
        let cfg = OrbitSearchConfig {
            exec: Exec::Sequential,
            ..OrbitSearchConfig::default()
        }
        .with_seed(derive_seed(ctx.seed ^ salt, 10_000 + i as u64));
        let best = orbit_maximize(&rho, objective, &cfg).unwrap().best_value;
        let want = closed(s);
        (want - best, best - want)
    });
    results
        .into_iter()
        .fold((0.0f64, 0.0f64), |(a, b), (x, y)| (a.max(x), b.max(y)))
}

fn theorem1(ctx: &Ctx) -> Vec<Check> {
    let s = Suite::Theorem1;
    let spectra = ctx.spectra3(1, 1000);
    let attained = ctx.worst(&spectra, |_, sp| {
        let n = negativity(&embed_full(&optimal_state(sp))).unwrap().negativity;
        (n - max_negativity_su3(sp)).abs()
    });
    let boundary = [
        max_negativity_su3(&Spectrum3::new([0.5, 0.25, 0.25]).unwrap()),
        max_negativity_su3(&Spectrum3::new([4.0 / 9.0, 4.0 / 9.0, 1.0 / 9.0]).unwrap()),
        (max_negativity_su3(&Spectrum3::new([1.0, 0.0, 0.0]).unwrap()) - 1.0).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let n_sampled = ctx.n(10, 100);
    let n_draws = ctx.n(1000, 10_000);
    let sampled = ctx.spectra3(2, n_sampled);
    let sample_excess = ctx.worst(&sampled, |i, sp| {
        let mut rng = seeded(derive_seed(ctx.seed ^ 2, i as u64));
        let v = orbit_sample_max(&optimal_state(sp), Objective::Negativity, n_draws, &mut rng).unwrap();
        (v - max_negativity_su3(sp)).max(0.0)
    });
    let n_oracle = ctx.n(5, 100);
    let (gap, excess) = oracle(ctx, Objective::Negativity, max_negativity_su3, &ctx.spectra3(3, n_oracle), 3);
    let ordering = ctx.worst(&spectra, |_, sp| {
        let padded = Spectrum4::from_slice(&sp.padded(4)).unwrap();
        (max_negativity_su3(sp) - max_negativity_su4(&padded)).max(0.0)
    });
    vec![
        check(s, "optimal state attains the closed form", attained, 1e-10, spectra.len()),
        check(s, "closed form vanishes at SAS endpoints, is 1 for a pure state", boundary, 1e-15, 3),
        check(s, "Haar samples never exceed the closed form", sample_excess, 1e-9, n_sampled * n_draws),
        check(s, "orbit ascent reaches the closed form", gap, 1e-5, n_oracle),
        check(s, "orbit ascent never exceeds the closed form", excess, 1e-9, n_oracle),
        check(s, "full-orbit maximum dominates the symmetric one", ordering, 1e-15, spectra.len()),
    ]
}

fn appendix_a(ctx: &Ctx) -> Vec<Check> {
    let s = Suite::AppendixA;
    let spectra = ctx.spectra3(4, 1000);
    let closed = ctx.worst(&spectra, |_, sp| {
        let [t1, t2, t3] = *sp.values();
        (min_critical_value(sp) - 0.5 * (t2 + t3 - (t1 * t1 + (t2 - t3).powi(2)).sqrt())).abs()
    });
    let half = ctx.worst(&spectra, |_, sp| {
        let n = max_negativity_su3(sp);
        if n > 0.0 {
            (min_critical_value(sp) + n / 2.0).abs()
        } else {
            0.0
        }
    });
    vec![
        check(s, "minimum critical value equals the closed-form minimum", closed, 1e-10, spectra.len()),
        check(s, "minimum critical value is minus half the maximal negativity", half, 1e-10, spectra.len()),
    ]
}

fn obs1(ctx: &Ctx) -> Vec<Check> {
    let s = Suite::Obs1;
    let spectra = ctx.spectra4(5, 1000);
    let closed = ctx.worst(&spectra, |_, sp| {
        let l = lambda_min_obs1(sp).unwrap_or(f64::NAN);
        let rho = dicke_mixture_state(sp);
        let m8 = min_eigenvalue(&partial_transpose(&embed_full(&rho), 0).unwrap());
        let d = (l - pt_lambda_min_symmetric(&rho)).abs().max((l.min(0.0) - m8.min(0.0)).abs());
        if d.is_nan() {
            f64::INFINITY
        } else {
            d
        }
    });
    let unsound = spectra
        .iter()
        .filter(|sp| not_sas_3qubit(sp) && lambda_min_obs1(sp).unwrap() >= 0.0)
        .count() as f64;
    let (_, pt) = counterexample_state();
    let margin = -obs1_margin(&Spectrum4Sym::new(COUNTEREXAMPLE_SPECTRUM).unwrap());
    let johnston = spectra
        .iter()
        .filter(|sp| johnston_as(&sp.padded(8), 4).unwrap())
        .count() as f64;
    vec![
        check(s, "closed-form lambda_min matches the partial transpose", closed, 1e-10, spectra.len()),
        check(s, "caught spectra have a negative lambda_min", unsound, 0.0, spectra.len()),
        Check {
            passed: pt < 0.0,
            ..check(s, "counterexample partial transpose is negative (measured: lambda_min)", pt, 0.0, 1)
        },
        check(s, "counterexample violates the test by 0.005", (margin - 0.005).abs(), 1e-4, 1),
        check(s, "padded three-qubit spectra fail the 2 x m criterion", johnston, 0.0, spectra.len()),
    ]
}

fn concurrence_suite(ctx: &Ctx) -> Vec<Check> {
    let s = Suite::Concurrence;
    let spectra = ctx.spectra3(6, 1000);
    let attained = ctx.worst(&spectra, |_, sp| {
        (concurrence(&embed_full(&optimal_state(sp))).unwrap() - max_concurrence_su3(sp)).abs()
    });
    let n_oracle = ctx.n(5, 100);
    let (gap, excess) = oracle(ctx, Objective::Concurrence, max_concurrence_su3, &ctx.spectra3(7, n_oracle), 7);
    vec![
        check(s, "optimal state attains the concurrence closed form", attained, 1e-10, spectra.len()),
        check(s, "orbit ascent reaches the concurrence closed form", gap, 1e-4, n_oracle),
        check(s, "orbit ascent never exceeds the concurrence closed form", excess, 1e-9, n_oracle),
    ]
}

fn sas(ctx: &Ctx) -> Vec<Check> {
    let s = Suite::Sas;
    let spectra = ctx.spectra3(8, 10_000);
    let random = spectra
        .iter()
        .filter(|sp| is_sas(sp) != (max_negativity_su3(sp) == 0.0))
        .count() as f64;
    let mut boundary = 0.0;
    let mut n = 0;
    for i in 1..1000 {
        let t3 = 1.0 / 9.0 + i as f64 * (0.25 - 1.0 / 9.0) / 1000.0;
        for delta in [-1e-8, 1e-8] {
            let t2 = (1.0 - t3.sqrt()).powi(2) + delta;
            let sp = Spectrum3::new([1.0 - t2 - t3, t2, t3]).unwrap();
            if is_sas(&sp) != (max_negativity_su3(&sp) == 0.0) || is_sas(&sp) != (delta > 0.0) {
                boundary += 1.0;
            }
            n += 1;
        }
    }
    vec![
        check(s, "SAS iff zero maximal negativity", random, 0.0, spectra.len()),
        check(s, "boundary-perturbed spectra classified consistently", boundary, 0.0, n),
    ]
}

fn radii(ctx: &Ctx) -> Vec<Check> {
    let s = Suite::Radii;
    let b2 = ball_radii_2qubit();
    let b3 = ball_radii_3qubit();
    let (min, _, max, _) = sas_boundary_extrema();
    let (lo, hi) = r_obs1_extrema(400);
    let mut checks = vec![
        check(s, "two-qubit boundary minimum is r_SAS", (min - b2.r_sas).abs(), 1e-9, 1),
        check(s, "two-qubit boundary maximum is R_SAS", (max - b2.big_r_sas).abs(), 1e-9, 1),
        check(s, "spin-1 lower bound", (r_sas_lower_bound(1.0) - 1.0 / (2.0 * 42f64.sqrt())).abs(), 1e-12, 1),
        check(s, "spin-3/2 lower bound", (r_sas_lower_bound(1.5) - 1.0 / (10.0 * 11f64.sqrt())).abs(), 1e-12, 1),
        check(s, "three-qubit boundary minimum", (lo.r - b3.r_sas_upper).abs(), 1e-9, 1),
        check(s, "three-qubit boundary maximum", (hi.r - b3.big_r_sas_upper).abs(), 1e-9, 1),
    ];
    let (n, m) = estimate_budget(if ctx.full { Scale::Full } else { Scale::Quick });
    let e = estimate_r_sas_3qubit(n, m, ctx.seed, ctx.exec).unwrap();
    checks.push(check(
        s,
        "R_SAS estimate stays below sqrt(3)/10",
        (e.r_estimate - b3.big_r_sas_upper).max(0.0),
        1e-9,
        n,
    ));
    if ctx.full {
        checks.push(check(s, "R_SAS estimate reaches 0.168", (0.168 - e.r_estimate).max(0.0), 0.0, n));
    }
    checks
}

pub fn verify(suite: Suite, seed: u64, scale: Scale, exec: Exec) -> VerifyReport {
    let ctx = Ctx {
        seed,
        full: scale == Scale::Full,
        exec,
    };
    let checks: Vec<Check> = suite
        .members()
        .into_iter()
        .flat_map(|m| match m {
            Suite::Theorem1 => theorem1(&ctx),
            Suite::AppendixA => appendix_a(&ctx),
            Suite::Obs1 => obs1(&ctx),
            Suite::Concurrence => concurrence_suite(&ctx),
            Suite::Sas => sas(&ctx),
            Suite::Radii => radii(&ctx),
            Suite::All => unreachable!(),
        })
        .collect();
    VerifyReport {
        suite,
        seed,
        scale,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
