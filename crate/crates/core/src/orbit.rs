//! Stochastic maximisation of an entanglement measure over the SU(N+1) orbit
//! of a symmetric state.
//!
//! Each restart samples Haar points, keeps the best, and climbs from it with
//! moves `U <- exp(i eps H) U` along random directions `H` in su(d). A move
//! is tried with `+eps` and then `-eps`; if both fail the step halves,
//! otherwise it grows by 1.5. Restart `k` draws from stream `k` of the
//! configured seed, and results are merged by a max-reduction that prefers
//! the lower restart index on ties.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{exp_i_hermitian, haar_random_unitary, su_generators, ComplexMatrix, HermitianMatrix, UnitaryMatrix, C64};
use crate::measures::{concurrence_raw, pt_lambda_min_symmetric};
use crate::par::{map_range, Exec};
use crate::rng::stream;
use crate::symmetric::{embed_full, SymmetricDensityMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Negativity,
    /// Two qubits only.
    Concurrence,
}

impl Objective {
    /// Value before clamping at zero; smooth in more places, so it is what
    /// the ascent climbs.
    fn raw(self, rho: &SymmetricDensityMatrix) -> f64 {
        match self {
            Objective::Negativity => -2.0 * pt_lambda_min_symmetric(rho),
            Objective::Concurrence => concurrence_raw(&embed_full(rho)),
        }
    }

    /// The measure itself.
    pub fn evaluate(self, rho: &SymmetricDensityMatrix) -> Result<f64> {
        self.check(rho)?;
        Ok(self.raw(rho).max(0.0))
    }

    fn check(self, rho: &SymmetricDensityMatrix) -> Result<()> {
        if self == Objective::Concurrence && rho.n_qubits() != 2 {
            return Err(Error::ObjectiveMismatch {
                objective: "concurrence",
                n_qubits: rho.n_qubits(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSearchConfig {
    /// Haar points drawn per restart before climbing.
    pub n_haar_samples: usize,
    pub n_ascent_restarts: usize,
    pub ascent_step_init: f64,
    /// Climbing stops once the step falls below this.
    pub ascent_tolerance: f64,
    pub max_ascent_iters: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for OrbitSearchConfig {
    /// At most `100 + 2 * 20_000` objective evaluations per restart.
    fn default() -> Self {
        Self {
            n_haar_samples: 100,
            n_ascent_restarts: 20,
            ascent_step_init: 0.3,
            ascent_tolerance: 1e-9,
            max_ascent_iters: 20_000,
            seed: 0,
            exec: Exec::default(),
        }
    }
}

impl OrbitSearchConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    // written negated so NaN is rejected
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        if self.n_haar_samples == 0 || self.n_ascent_restarts == 0 || self.max_ascent_iters == 0 {
            return Err(Error::Config("counts must be positive".into()));
        }
        if !(self.ascent_tolerance > 0.0) || !(self.ascent_step_init > 0.0) {
            return Err(Error::Config(
                "step and tolerance must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSearchResult {
    pub best_value: f64,
    pub best_unitary: UnitaryMatrix,
    pub n_evaluations: usize,
    /// Every restart ended by step size rather than the iteration cap.
    pub converged: bool,
}

struct Climb {
    value: f64,
    unitary: UnitaryMatrix,
    evaluations: usize,
    converged: bool,
}

const REORTHONORMALIZE_EVERY: usize = 64;

fn random_direction<R: Rng + ?Sized>(gens: &[HermitianMatrix], rng: &mut R) -> HermitianMatrix {
    let d = gens[0].dim();
    let w: Vec<f64> = gens.iter().map(|_| rng.sample(StandardNormal)).collect();
    let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    let m = ComplexMatrix::from_fn(d, d, |i, j| {
        gens.iter()
            .zip(&w)
            .map(|(g, &x)| g[(i, j)] * x)
            .sum::<C64>()
            / norm
    });
    HermitianMatrix::symmetrized(&m)
}

fn climb<R: Rng + ?Sized>(
    rho: &SymmetricDensityMatrix,
    objective: Objective,
    cfg: &OrbitSearchConfig,
    start: UnitaryMatrix,
    rng: &mut R,
) -> Climb {
    let gens = su_generators(rho.n_qubits() + 1);
    let mut u = start;
    let mut value = objective.raw(&rho.evolved(&u));
    let mut evaluations = 1;
    let mut eps = cfg.ascent_step_init;
    let mut accepted = 0;
    let mut converged = false;
    for _ in 0..cfg.max_ascent_iters {
        if eps < cfg.ascent_tolerance {
            converged = true;
            break;
        }
        let h = random_direction(&gens, rng);
        let mut moved = false;
        for sign in [1.0, -1.0] {
            let cand = u.left_multiplied(&exp_i_hermitian(&h, sign * eps));
            let v = objective.raw(&rho.evolved(&cand));
            evaluations += 1;
            if v > value {
                u = cand;
                value = v;
                moved = true;
                break;
            }
        }
        if moved {
            eps *= 1.5;
            accepted += 1;
            if accepted % REORTHONORMALIZE_EVERY == 0 {
                u = u.reorthonormalized();
                value = objective.raw(&rho.evolved(&u));
                evaluations += 1;
            }
        } else {
            eps *= 0.5;
        }
    }
    if !converged && eps < cfg.ascent_tolerance {
        converged = true;
    }
    let u = u.reorthonormalized();
    Climb {
        value: objective.raw(&rho.evolved(&u)).max(0.0),
        unitary: u,
        evaluations: evaluations + 1,
        converged,
    }
}

fn merge(climbs: Vec<Climb>) -> OrbitSearchResult {
    let n_evaluations = climbs.iter().map(|c| c.evaluations).sum();
    let converged = climbs.iter().all(|c| c.converged);
    let best = climbs
        .into_iter()
        .reduce(|a, b| if b.value > a.value { b } else { a })
        .expect("at least one restart");
    OrbitSearchResult {
        best_value: best.value,
        best_unitary: best.unitary,
        n_evaluations,
        converged,
    }
}

/// Lower bound on `max_U E(U rho U^dagger)`, deterministic for a fixed seed.
pub fn orbit_maximize(
    rho: &SymmetricDensityMatrix,
    objective: Objective,
    cfg: &OrbitSearchConfig,
) -> Result<OrbitSearchResult> {
    objective.check(rho)?;
    cfg.validate()?;
    let d = rho.n_qubits() + 1;
    let climbs = map_range(cfg.exec, cfg.n_ascent_restarts, |k| {
        let mut rng = stream(cfg.seed, k as u64);
        let mut start = None;
        let mut start_value = f64::NEG_INFINITY;
        for _ in 0..cfg.n_haar_samples {
            let u = haar_random_unitary(d, &mut rng).expect("dim 3 or 4");
            let v = objective.raw(&rho.evolved(&u));
            if v > start_value {
                start_value = v;
                start = Some(u);
            }
        }
        let mut c = climb(rho, objective, cfg, start.expect("n_haar_samples > 0"), &mut rng);
        c.evaluations += cfg.n_haar_samples;
        c
    });
    Ok(merge(climbs))
}

/// One climb per given start point; `cfg.n_ascent_restarts` and
/// `cfg.n_haar_samples` are ignored.
pub fn orbit_maximize_from(
    rho: &SymmetricDensityMatrix,
    objective: Objective,
    cfg: &OrbitSearchConfig,
    starts: &[UnitaryMatrix],
) -> Result<OrbitSearchResult> {
    objective.check(rho)?;
    cfg.validate()?;
    if starts.is_empty() {
        return Err(Error::Config("no start points".into()));
    }
    if let Some(u) = starts.iter().find(|u| u.dim() != rho.n_qubits() + 1) {
        return Err(Error::Dimension(format!(
            "start unitary of size {} for a {}-qubit state",
            u.dim(),
            rho.n_qubits()
        )));
    }
    let climbs = map_range(cfg.exec, starts.len(), |k| {
        let mut rng = stream(cfg.seed, k as u64);
        climb(rho, objective, cfg, starts[k], &mut rng)
    });
    Ok(merge(climbs))
}

/// `n` Haar draws from `rng`, in order.
pub fn haar_samples<R: Rng + ?Sized>(dim: usize, n: usize, rng: &mut R) -> Result<Vec<UnitaryMatrix>> {
    (0..n).map(|_| haar_random_unitary(dim, rng)).collect()
}

/// Largest objective value over `n` Haar orbit points.
pub fn orbit_sample_max<R: Rng + ?Sized>(
    rho: &SymmetricDensityMatrix,
    objective: Objective,
    n: usize,
    rng: &mut R,
) -> Result<f64> {
    objective.check(rho)?;
    if n == 0 {
        return Err(Error::Config("need at least one sample".into()));
    }
    let d = rho.n_qubits() + 1;
    let mut best = 0.0f64;
    for _ in 0..n {
        let u = haar_random_unitary(d, rng)?;
        best = best.max(objective.raw(&rho.evolved(&u)));
    }
    Ok(best)
}
