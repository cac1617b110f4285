//! Three-qubit symmetric states: the Dicke-mixture entanglement test, the
//! counterexample showing it is not sufficient, and the radius bounds.

use crate::error::{Error, Result};
use crate::linalg::{haar_random_unitary, ComplexMatrix, UnitaryMatrix};
use crate::measures::pt_lambda_min_symmetric;
use crate::optimize::{minimize_2d_zoom, minimize_scalar};
use crate::par::{map_range, Exec};
use crate::rng::{seeded, stream, derive_seed};
use crate::spectrum::Spectrum4Sym;
use crate::symmetric::SymmetricDensityMatrix;
use crate::tolerance::TOL;
use crate::two_qubit::r_sas_lower_bound;

/// `t4 |D3><D3| + t1 |D2><D2| + t3 |D1><D1| + t2 |D0><D0|`, i.e. the Dicke
/// diagonal `(t2, t3, t1, t4)` for `k = 0..3`.
pub fn dicke_mixture_state(s: &Spectrum4Sym) -> SymmetricDensityMatrix {
    let [t1, t2, t3, t4] = *s.values();
    SymmetricDensityMatrix::dicke_diagonal(3, &[t2, t3, t1, t4]).expect("valid spectrum")
}

fn obs1_radicand(t2: f64, t3: f64, t4: f64) -> f64 {
    8.0 - 16.0 * t4 + 17.0 * t4 * t4 - 16.0 * t3 + 4.0 * t4 * t3 + 12.0 * t3 * t3 - 16.0 * t2
        + 16.0 * t4 * t2
        + 16.0 * t3 * t2
        + 8.0 * t2 * t2
}

/// Smallest eigenvalue of the partial transpose of [`dicke_mixture_state`] on
/// its support, `(3 t4 + 2 t3 - sqrt(p)) / 6`.
pub fn lambda_min_obs1(s: &Spectrum4Sym) -> Result<f64> {
    let [_, t2, t3, t4] = *s.values();
    let p = obs1_radicand(t2, t3, t4);
    if p < 0.0 {
        return Err(Error::NegativeRadicand {
            value: p,
            context: "lambda_min_obs1",
        });
    }
    Ok((3.0 * t4 + 2.0 * t3 - p.sqrt()) / 6.0)
}

/// `(1 - t3 - t4 - sqrt(3 t3 t4)) - t2`; positive where the Dicke-mixture
/// test certifies entanglement (given `t3 > 0`).
pub fn obs1_margin(s: &Spectrum4Sym) -> f64 {
    let [_, t2, t3, t4] = *s.values();
    1.0 - t3 - t4 - (3.0 * t3 * t4).sqrt() - t2
}

/// `t2 < 1 - t3 - t4 - sqrt(3 t3 t4)` and `t3 > 0`: the orbit contains an
/// entangled state, so the spectrum is not SAS. `false` is inconclusive.
pub fn not_sas_3qubit(s: &Spectrum4Sym) -> bool {
    s.get(3) > 0.0 && obs1_margin(s) > 0.0
}

pub const COUNTEREXAMPLE_SPECTRUM: [f64; 4] = [0.362191, 0.213809, 0.213, 0.211];

pub fn counterexample_unitary() -> UnitaryMatrix {
    let m = ComplexMatrix::from_real_rows(&[
        vec![0.5, 0.5, 0.5, 0.5],
        vec![0.5, -0.5, 0.5, -0.5],
        vec![0.5, -0.5, -0.5, 0.5],
        vec![0.5, 0.5, -0.5, -0.5],
    ])
    .expect("4x4");
    UnitaryMatrix::new(m).expect("orthogonal")
}

/// A state outside the Dicke-mixture test's reach that is nonetheless
/// entangled. Returns the state and the smallest eigenvalue of its partial
/// transpose (8x8 embedding, qubit 0 transposed).
pub fn counterexample_state() -> (SymmetricDensityMatrix, f64) {
    let s = Spectrum4Sym::new(COUNTEREXAMPLE_SPECTRUM).expect("normalised");
    let rho = dicke_mixture_state(&s).evolved(&counterexample_unitary());
    let full = crate::symmetric::embed_full(&rho);
    let pt = crate::measures::negativity(&full).expect("valid state");
    (rho, pt.lambda_min)
}

/// Spectrum on the Obs.-1 boundary, `t1 = sqrt(3 t3 t4)` and
/// `t2 = 1 - t1 - t3 - t4`, if it is sorted (ties within `1e-12` allowed,
/// since the maximum sits where `t1 = t2 = t3`).
fn boundary_spectrum(tau3: f64, tau4: f64) -> Option<[f64; 4]> {
    if !(tau3.is_finite() && tau4.is_finite()) || tau4 < 0.0 || tau3 < tau4 {
        return None;
    }
    let t1 = (3.0 * tau3 * tau4).sqrt();
    let t2 = 1.0 - t1 - tau3 - tau4;
    let slack = TOL.boundary;
    (t1 >= t2 - slack && t2 >= tau3 - slack).then_some([t1, t2, tau3, tau4])
}

fn boundary_r(t: [f64; 4]) -> f64 {
    t.iter().map(|x| (x - 0.25).powi(2)).sum::<f64>().sqrt()
}

/// Radius of the Obs.-1 boundary point with smallest eigenvalues
/// `(tau3, tau4)`:
/// `r^2 = (t3 - 1/4)^2 + (t4 - 1/4)^2 + (sqrt(3 t3 t4) - 1/4)^2 + (t3 + t4 + sqrt(3 t3 t4) - 3/4)^2`.
///
/// Points whose implied spectrum is not sorted are rejected.
pub fn r_obs1_boundary(tau3: f64, tau4: f64) -> Result<f64> {
    let t = boundary_spectrum(tau3, tau4).ok_or_else(|| {
        Error::Domain(format!(
            "(tau3, tau4) = ({tau3}, {tau4}) does not give a sorted spectrum"
        ))
    })?;
    Ok(boundary_r(t))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusExtremum {
    pub tau3: f64,
    pub tau4: f64,
    pub r: f64,
}

/// Minimum and maximum of [`r_obs1_boundary`] over its valid region, by a
/// `resolution x resolution` scan followed by zooming grid refinement.
pub fn r_obs1_extrema(resolution: usize) -> (RadiusExtremum, RadiusExtremum) {
    let f = |p: [f64; 2]| boundary_spectrum(p[0], p[1]).map(boundary_r);
    let n = resolution.max(10);
    let mut lo = ([0.0, 0.0], f64::INFINITY);
    let mut hi = ([0.0, 0.0], f64::NEG_INFINITY);
    for i in 0..=n {
        for j in 0..=n {
            let p = [i as f64 / (3 * n) as f64, j as f64 / (4 * n) as f64];
            if let Some(v) = f(p) {
                if v < lo.1 {
                    lo = (p, v);
                }
                if v > hi.1 {
                    hi = (p, v);
                }
            }
        }
    }
    let span = 2.0 / n as f64;
    let (pmin, vmin) = minimize_2d_zoom(f, lo.0, span, 1e-13);
    let (pmax, vmax) = minimize_2d_zoom(|p| f(p).map(|v| -v), hi.0, span, 1e-13);
    (
        RadiusExtremum {
            tau3: pmin[0],
            tau4: pmin[1],
            r: vmin,
        },
        RadiusExtremum {
            tau3: pmax[0],
            tau4: pmax[1],
            r: -vmax,
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallRadii3 {
    /// Spin-3/2 value of the general lower bound, `1/(10 sqrt 11)`.
    pub r_sas_lower: f64,
    /// Smallest radius on the Obs.-1 boundary, `sqrt(9 - 5 sqrt 3)/(2 sqrt 6)`.
    pub r_sas_upper: f64,
    /// Largest radius on the Obs.-1 boundary, `sqrt(3)/10`.
    pub big_r_sas_upper: f64,
}

pub fn ball_radii_3qubit() -> BallRadii3 {
    BallRadii3 {
        r_sas_lower: r_sas_lower_bound(1.5),
        r_sas_upper: (9.0 - 5.0 * 3f64.sqrt()).sqrt() / (2.0 * 6f64.sqrt()),
        big_r_sas_upper: 3f64.sqrt() / 10.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RSasEstimate {
    /// Largest radius of a spectrum whose sampled orbit showed no entanglement.
    pub r_estimate: f64,
    /// The spectrum attaining it.
    pub spectrum: [f64; 4],
    /// Directions whose bisection was actually run.
    pub n_directions_searched: usize,
    pub n_spectra: usize,
    pub n_orbit_samples: usize,
    pub seed: u64,
}

const ENTANGLED: f64 = 1e-9;
const BISECTION_STEPS: usize = 40;
const CHUNK: usize = 32;

/// Point at parameter `t` on the ray from the maximally mixed spectrum
/// through `dir`; rays stay sorted because `dir` is sorted.
fn on_ray(dir: &[f64; 4], t: f64) -> [f64; 4] {
    dir.map(|x| 0.25 + t * (x - 0.25))
}

/// Parameter where the ray leaves the region not excluded by the Dicke
/// mixture test (or the simplex).
fn ray_limit(dir: &[f64; 4]) -> f64 {
    let t_simplex = 0.25 / (0.25 - dir[3]);
    let excluded = |t: f64| {
        let s = on_ray(dir, t).map(|x| x.max(0.0));
        s[2] > 0.0 && 1.0 - s[2] - s[3] - (3.0 * s[2] * s[3]).sqrt() - s[1] > 0.0
    };
    if !excluded(t_simplex) {
        return t_simplex;
    }
    let (mut a, mut b) = (0.0, t_simplex);
    for _ in 0..60 {
        let m = 0.5 * (a + b);
        if excluded(m) {
            b = m;
        } else {
            a = m;
        }
    }
    a
}

fn ray_radius(dir: &[f64; 4], t: f64) -> f64 {
    t * dir.iter().map(|x| (x - 0.25).powi(2)).sum::<f64>().sqrt()
}

/// Whether any orbit point (the Dicke mixture itself, then the sampled
/// unitaries) has negativity above `1e-9`.
fn sampled_orbit_entangled(t: &[f64; 4], unitaries: &[UnitaryMatrix]) -> bool {
    let s = match Spectrum4Sym::new(*t) {
        Ok(s) => s,
        Err(_) => return true,
    };
    if not_sas_3qubit(&s) {
        return true;
    }
    let rho = dicke_mixture_state(&s);
    if -2.0 * pt_lambda_min_symmetric(&rho) > ENTANGLED {
        return true;
    }
    unitaries
        .iter()
        .any(|u| -2.0 * pt_lambda_min_symmetric(&rho.evolved(u)) > ENTANGLED)
}

/// Monte-Carlo estimate of the radius of the smallest ball containing all
/// three-qubit SAS states.
///
/// `n_spectra` random spectra fix ray directions from the maximally mixed
/// state. Rays are visited in order of decreasing radius at which the Dicke
/// mixture test starts excluding them; along each ray the SAS boundary is
/// bisected, calling a point SAS when none of `n_orbit_samples` Haar orbit
/// points is entangled. The search stops once no remaining ray can beat the
/// incumbent. Sampled orbits miss entangled points, so the estimate leans
/// high, but the Dicke-mixture test keeps it below `sqrt(3)/10`.
pub fn estimate_r_sas_3qubit(
    n_spectra: usize,
    n_orbit_samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<RSasEstimate> {
    if n_spectra == 0 || n_orbit_samples == 0 {
        return Err(Error::Config("sample counts must be positive".into()));
    }
    let mut rng = seeded(seed);
    let mut rays: Vec<([f64; 4], f64, f64)> = (0..n_spectra)
        .map(|_| {
            let d = *Spectrum4Sym::random(&mut rng).values();
            let t = ray_limit(&d);
            (d, t, ray_radius(&d, t))
        })
        .collect();
    rays.sort_by(|a, b| b.2.total_cmp(&a.2));

    let orbit_seed = derive_seed(seed, 1);
    let mut best = (0.0, [0.25; 4]);
    let mut searched = 0;
    for (chunk_idx, chunk) in rays.chunks(CHUNK).enumerate() {
        let incumbent = best.0;
        let live: Vec<usize> = (0..chunk.len()).filter(|&i| chunk[i].2 > incumbent).collect();
        if live.is_empty() {
            break;
        }
        let found = map_range(exec, live.len(), |k| {
            let (dir, t_max, _) = chunk[live[k]];
            let index = (chunk_idx * CHUNK + live[k]) as u64;
            let mut r = stream(orbit_seed, index);
            let us: Vec<UnitaryMatrix> = (0..n_orbit_samples)
                .map(|_| haar_random_unitary(4, &mut r).expect("dim 4"))
                .collect();
            let unit = ray_radius(&dir, 1.0);
            let t_lo = incumbent / unit;
            if sampled_orbit_entangled(&on_ray(&dir, t_lo), &us) {
                return None;
            }
            if !sampled_orbit_entangled(&on_ray(&dir, t_max), &us) {
                return Some((ray_radius(&dir, t_max), on_ray(&dir, t_max)));
            }
            let (mut a, mut b) = (t_lo, t_max);
            for _ in 0..BISECTION_STEPS {
                let m = 0.5 * (a + b);
                if sampled_orbit_entangled(&on_ray(&dir, m), &us) {
                    b = m;
                } else {
                    a = m;
                }
            }
            Some((ray_radius(&dir, a), on_ray(&dir, a)))
        });
        searched += live.len();
        for (r, t) in found.into_iter().flatten() {
            if r > best.0 {
                best = (r, t);
            }
        }
    }
    Ok(RSasEstimate {
        r_estimate: best.0,
        spectrum: best.1,
        n_directions_searched: searched,
        n_spectra,
        n_orbit_samples,
        seed,
    })
}

/// Scalar helper for callers that want the Obs.-1 boundary radius along the
/// diagonal `tau3 = tau4`.
pub fn r_obs1_diagonal_minimum() -> (f64, f64) {
    let hi = 0.25;
    minimize_scalar(
        |t| r_obs1_boundary(t, t).unwrap_or(f64::INFINITY),
        0.0,
        hi,
        2000,
    )
}
