//! Acceptance suite: one PASS/FAIL line per criterion at pinned tolerances.
//! Runs as a plain binary (`harness = false`) so the lines always print.

use std::process::ExitCode;
use std::time::Instant;

use symsep_core::linalg::{haar_random_unitary, min_eigenvalue};
use symsep_core::measures::pt_lambda_min_symmetric;
use symsep_core::orbit::{orbit_maximize, Objective, OrbitSearchConfig};
use symsep_core::rng::{derive_seed, seeded};
use symsep_core::symmetric::{embed_full, partial_transpose};
use symsep_core::three_qubit::{
    ball_radii_3qubit, counterexample_state, dicke_mixture_state, estimate_r_sas_3qubit, lambda_min_obs1,
    obs1_margin, r_obs1_extrema, COUNTEREXAMPLE_SPECTRUM,
};
use symsep_core::two_qubit::{
    is_sas, johnston_as, max_concurrence_su3, max_negativity_su3, min_critical_value, optimal_state,
    r_sas_lower_bound, sas_boundary_extrema,
};
use symsep_core::{Exec, Spectrum3, Spectrum4Sym, SymmetricDensityMatrix};

const SEED: u64 = 20_240_101;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Random point on the SU(3) orbit of the optimal arrangement, so the search
/// does not start at the answer.
fn scrambled(s: &Spectrum3, seed: u64) -> SymmetricDensityMatrix {
    optimal_state(s).evolved(&haar_random_unitary(3, &mut seeded(seed)).unwrap())
}

fn orbit_agreement(objective: Objective, closed: fn(&Spectrum3) -> f64, tol: f64, salt: u64) -> Outcome {
    let mut rng = seeded(SEED ^ salt);
    let mut worst_gap = 0.0f64;
    let mut worst_excess = f64::NEG_INFINITY;
    let mut max_evals = 0;
    for i in 0..100u64 {
        let s = Spectrum3::random(&mut rng);
        let rho = scrambled(&s, derive_seed(SEED ^ salt, i));
        let cfg = OrbitSearchConfig::default().with_seed(derive_seed(SEED ^ salt, 1000 + i));
        let r = orbit_maximize(&rho, objective, &cfg).unwrap();
        let want = closed(&s);
        worst_gap = worst_gap.max(want - r.best_value);
        worst_excess = worst_excess.max(r.best_value - want);
        max_evals = max_evals.max(r.n_evaluations / cfg.n_ascent_restarts);
    }
    outcome(
        worst_gap <= tol && worst_excess <= 1e-9,
        format!(
            "largest shortfall {worst_gap:.2e} (tol {tol:.0e}), largest excess {worst_excess:.2e} (tol 1e-9), \
             <= {max_evals} evaluations per restart"
        ),
    )
}

fn c1_negativity_oracle() -> Outcome {
    orbit_agreement(Objective::Negativity, max_negativity_su3, 1e-5, 1)
}

fn c2_boundary_states() -> Outcome {
    let a = max_negativity_su3(&Spectrum3::new([0.5, 0.25, 0.25]).unwrap());
    let b = max_negativity_su3(&Spectrum3::new([4.0 / 9.0, 4.0 / 9.0, 1.0 / 9.0]).unwrap());
    let c = max_negativity_su3(&Spectrum3::new([1.0, 0.0, 0.0]).unwrap());
    outcome(
        a.abs() <= 1e-15 && b.abs() <= 1e-15 && (c - 1.0).abs() <= 1e-15,
        format!("N(1/2,1/4,1/4) = {a:e}, N(4/9,4/9,1/9) = {b:e}, N(1,0,0) = {c}"),
    )
}

fn c3_critical_points() -> Outcome {
    let mut rng = seeded(SEED ^ 3);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let s = Spectrum3::random(&mut rng);
        let [t1, t2, t3] = *s.values();
        let want = 0.5 * (t2 + t3 - (t1 * t1 + (t2 - t3).powi(2)).sqrt());
        worst = worst.max((min_critical_value(&s) - want).abs());
    }
    outcome(worst <= 1e-10, format!("max deviation {worst:.2e} over 1000 spectra"))
}

fn c4_obs1_closed_form() -> Outcome {
    let mut rng = seeded(SEED ^ 4);
    let (mut support, mut full8) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let s = Spectrum4Sym::random(&mut rng);
        let l = match lambda_min_obs1(&s) {
            Ok(l) => l,
            Err(e) => return outcome(false, format!("{s}: {e}")),
        };
        let rho = dicke_mixture_state(&s);
        support = support.max((l - pt_lambda_min_symmetric(&rho)).abs());
        // the 8x8 transpose carries two extra structural zero eigenvalues
        let m8 = min_eigenvalue(&partial_transpose(&embed_full(&rho), 0).unwrap());
        full8 = full8.max((l.min(0.0) - m8.min(0.0)).abs());
    }
    outcome(
        support <= 1e-10 && full8 <= 1e-10,
        format!("max deviation {support:.2e} on the transpose support, {full8:.2e} against the 8x8 minimum"),
    )
}

fn c5_counterexample() -> Outcome {
    let (_, pt) = counterexample_state();
    let margin = -obs1_margin(&Spectrum4Sym::new(COUNTEREXAMPLE_SPECTRUM).unwrap());
    outcome(
        pt < 0.0 && (margin - 0.005).abs() <= 1e-4,
        format!("lambda_min = {pt:.6e}, violation margin = {margin:.6}"),
    )
}

fn c6_two_qubit_radii() -> Outcome {
    let s6 = 6f64.sqrt();
    let (min, _, max, _) = sas_boundary_extrema();
    let lb = r_sas_lower_bound(1.0);
    let (dmin, dmax, dlb) = (
        (min - 1.0 / (2.0 * s6)).abs(),
        (max - 2.0 / (3.0 * s6)).abs(),
        (lb - 1.0 / (2.0 * 42f64.sqrt())).abs(),
    );
    outcome(
        dmin <= 1e-9 && dmax <= 1e-9 && dlb <= 1e-12,
        format!("min {min:.12} (dev {dmin:.1e}), max {max:.12} (dev {dmax:.1e}), bound dev {dlb:.1e}"),
    )
}

fn c7_three_qubit_radii() -> Outcome {
    let (lo, hi) = r_obs1_extrema(400);
    let b = ball_radii_3qubit();
    let t = (3.0 + 3f64.sqrt()) / 24.0;
    let dlo = (lo.r - b.r_sas_upper).abs();
    let dhi = (hi.r - b.big_r_sas_upper).abs();
    let located = (lo.tau3 - t).abs() < 1e-4 && (lo.tau4 - t).abs() < 1e-4 && (hi.tau3 - 0.3).abs() < 1e-6 && (hi.tau4 - 0.1).abs() < 1e-6;
    outcome(
        dlo <= 1e-9 && dhi <= 1e-9 && located,
        format!(
            "min {:.12} at ({:.6}, {:.6}) dev {dlo:.1e}; max {:.12} at ({:.6}, {:.6}) dev {dhi:.1e}",
            lo.r, lo.tau3, lo.tau4, hi.r, hi.tau3, hi.tau4
        ),
    )
}

fn c8_r_sas_estimate() -> Outcome {
    let e = estimate_r_sas_3qubit(10_000, 1_000, SEED, Exec::default()).unwrap();
    let r = e.r_estimate;
    outcome(
        (0.168..=0.17321).contains(&r),
        format!(
            "estimate {r:.6} in [0.168, 0.17321], {} of {} rays bisected",
            e.n_directions_searched, e.n_spectra
        ),
    )
}

fn c9_johnston() -> Outcome {
    let mut rng = seeded(SEED ^ 9);
    let passing = (0..1000)
        .filter(|_| johnston_as(&Spectrum4Sym::random(&mut rng).padded(8), 4).unwrap())
        .count();
    outcome(passing == 0, format!("{passing} of 1000 padded spectra satisfy the criterion"))
}

fn c10_concurrence() -> Outcome {
    orbit_agreement(Objective::Concurrence, max_concurrence_su3, 1e-4, 10)
}

fn c11_sas_consistency() -> Outcome {
    let mut rng = seeded(SEED ^ 11);
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let s = Spectrum3::random(&mut rng);
        if is_sas(&s) != (max_negativity_su3(&s) == 0.0) {
            mismatches += 1;
        }
    }
    // interior points of the curve sqrt(t2) + sqrt(t3) = 1, pushed in and
    // out by 1e-8 (at t3 = 1/9 a push would reorder t1 and t2)
    let mut boundary_checked = 0;
    for i in 1..1000 {
        let t3 = 1.0 / 9.0 + i as f64 * (0.25 - 1.0 / 9.0) / 1000.0;
        for delta in [-1e-8, 1e-8] {
            let t2 = (1.0 - t3.sqrt()).powi(2) + delta;
            let s = Spectrum3::new([1.0 - t2 - t3, t2, t3]).unwrap();
            let sas = is_sas(&s);
            let zero = max_negativity_su3(&s) == 0.0;
            if sas != zero || sas != (delta > 0.0) {
                mismatches += 1;
            }
            boundary_checked += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("{mismatches} mismatches over 10000 random and {boundary_checked} boundary-perturbed spectra"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("maximal negativity oracle equivalence", c1_negativity_oracle),
        ("boundary states", c2_boundary_states),
        ("critical-point completeness", c3_critical_points),
        ("three-qubit lambda_min closed form", c4_obs1_closed_form),
        ("counterexample reproduction", c5_counterexample),
        ("two-qubit ball radii", c6_two_qubit_radii),
        ("three-qubit ball radii", c7_three_qubit_radii),
        ("Monte-Carlo R_SAS bracket", c8_r_sas_estimate),
        ("no absolute separability for N = 3", c9_johnston),
        ("concurrence optimality", c10_concurrence),
        ("SAS classification consistency", c11_sas_consistency),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("{}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| f == &id || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} [{:>2}] {name}: {} ({secs:.1} s)",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
