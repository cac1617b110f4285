//! Closed forms for two-qubit states: the SU(4) and symmetric SU(3) orbit
//! maxima, absolute-separability tests, critical points of the reduced
//! partial-transpose objective, and the radius/ball results.

use crate::error::{Error, Result};
use crate::spectrum::{Spectrum3, Spectrum4};
use crate::symmetric::SymmetricDensityMatrix;
use crate::tolerance::TOL;

/// Largest negativity on the SU(4) orbit of a two-qubit state.
pub fn max_negativity_su4(s: &Spectrum4) -> f64 {
    let [l1, l2, l3, l4] = *s.values();
    (((l1 - l3).powi(2) + (l2 - l4).powi(2)).sqrt() - l2 - l4).max(0.0)
}

/// Absolutely separable under SU(4): `(l1 - l3)^2 - 4 l2 l4 <= 0`.
pub fn is_as_su4(s: &Spectrum4) -> bool {
    let [l1, l2, l3, l4] = *s.values();
    (l1 - l3).powi(2) - 4.0 * l2 * l4 <= TOL.boundary
}

/// Absolute separability of a `2 x m` state from its spectrum:
/// `l_1 <= l_(2m-1) + 2 sqrt(l_(2m-2) l_(2m))`.
pub fn johnston_as(spectrum: &[f64], m: usize) -> Result<bool> {
    if m < 2 || spectrum.len() != 2 * m {
        return Err(Error::Spectrum(format!(
            "need 2m = {} entries with m >= 2, got {}",
            2 * m,
            spectrum.len()
        )));
    }
    if spectrum.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Spectrum("spectrum must be sorted non-ascending".into()));
    }
    if spectrum.iter().any(|&x| x < -TOL.negative_entry) {
        return Err(Error::Spectrum("negative entry".into()));
    }
    let sum: f64 = spectrum.iter().sum();
    if (sum - 1.0).abs() > TOL.spectrum_renormalize {
        return Err(Error::Spectrum(format!("entries sum to {sum}")));
    }
    let l = |k: usize| spectrum[k - 1].max(0.0);
    let n = 2 * m;
    Ok(l(1) <= l(n - 1) + 2.0 * (l(n - 2) * l(n)).sqrt() + TOL.boundary)
}

/// Largest negativity on the SU(3) orbit of a symmetric two-qubit state:
/// `max(0, sqrt(t1^2 + (t2 - t3)^2) - t2 - t3)`.
pub fn max_negativity_su3(s: &Spectrum3) -> f64 {
    let [t1, t2, t3] = *s.values();
    ((t1 * t1 + (t2 - t3).powi(2)).sqrt() - t2 - t3).max(0.0)
}

/// The orbit element attaining [`max_negativity_su3`]:
/// `t3 |D0><D0| + t1 |D1><D1| + t2 |D2><D2|`.
pub fn optimal_state(s: &Spectrum3) -> SymmetricDensityMatrix {
    let [t1, t2, t3] = *s.values();
    SymmetricDensityMatrix::dicke_diagonal(2, &[t3, t1, t2]).expect("valid spectrum")
}

/// Concurrence of [`optimal_state`]: `max(0, t1 - 2 sqrt(t2 t3))`.
pub fn max_concurrence_su3(s: &Spectrum3) -> f64 {
    let [t1, t2, t3] = *s.values();
    (t1 - 2.0 * (t2 * t3).sqrt()).max(0.0)
}

/// Symmetric absolute separability: `sqrt(t2) + sqrt(t3) >= 1`.
/// Equality (within `1e-12`) counts as SAS.
pub fn is_sas(s: &Spectrum3) -> bool {
    let [_, t2, t3] = *s.values();
    t2.sqrt() + t3.sqrt() >= 1.0 - TOL.boundary
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalCase {
    /// delta = pi/2, t2 >= t3, lower root.
    AI,
    /// delta = pi/2, t2 <= t3, upper root.
    AII,
    /// alpha = pi/2.
    AIII,
    /// alpha = 0, beta = pi/4.
    AIV,
    /// Sigma_3 dropped, t1 >= t2.
    BI,
    /// Sigma_3 dropped, t1 <= t2.
    BII,
}

impl CriticalCase {
    pub fn label(self) -> &'static str {
        match self {
            CriticalCase::AI => "A-i",
            CriticalCase::AII => "A-ii",
            CriticalCase::AIII => "A-iii",
            CriticalCase::AIV => "A-iv",
            CriticalCase::BI => "B-i",
            CriticalCase::BII => "B-ii",
        }
    }
}

/// Location of a critical point. `None` entries mark points where the
/// parametrisation degenerates (zero denominator) although Lambda is defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalParameters {
    Z(Option<f64>),
    Y { y1: Option<f64>, y2: Option<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub case_id: CriticalCase,
    /// `(t1, t2, t3) = (tau[p0], tau[p1], tau[p2])`, zero-based.
    pub permutation: [usize; 3],
    pub lambda_value: f64,
    pub parameters: CriticalParameters,
}

impl CriticalPoint {
    pub fn weights(&self, s: &Spectrum3) -> [f64; 3] {
        self.permutation.map(|i| s.values()[i])
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// All critical values of the reduced objective, over every assignment of
/// the spectrum to `(t1, t2, t3)`.
pub fn critical_point_values(s: &Spectrum3) -> Vec<CriticalPoint> {
    let mut out = Vec::new();
    for perm in PERMUTATIONS {
        let [t1, t2, t3] = perm.map(|i| s.values()[i]);
        let root = (t1 * t1 + (t2 - t3).powi(2)).sqrt();
        let z = |sign: f64| (root > 0.0).then(|| sign * t1 / root);
        if t2 >= t3 {
            out.push(CriticalPoint {
                case_id: CriticalCase::AI,
                permutation: perm,
                lambda_value: 0.5 * (t2 + t3 - root),
                parameters: CriticalParameters::Z(z(-1.0)),
            });
        }
        if t2 <= t3 {
            out.push(CriticalPoint {
                case_id: CriticalCase::AII,
                permutation: perm,
                lambda_value: 0.5 * (t2 + t3 + root),
                parameters: CriticalParameters::Z(z(1.0)),
            });
        }
        out.push(CriticalPoint {
            case_id: CriticalCase::AIII,
            permutation: perm,
            lambda_value: 0.5 * (t2 + t3 - t1),
            parameters: CriticalParameters::Z(Some(-1.0)),
        });
        out.push(CriticalPoint {
            case_id: CriticalCase::AIV,
            permutation: perm,
            lambda_value: 0.5,
            parameters: CriticalParameters::Z(Some(1.0)),
        });

        let disc = 1.0 - 8.0 * t1 * t2;
        if disc >= 0.0 {
            let w = disc.sqrt();
            let frac = |num: f64| (w > 0.0).then(|| num / w);
            if t1 >= t2 {
                out.push(CriticalPoint {
                    case_id: CriticalCase::BI,
                    permutation: perm,
                    lambda_value: 0.25 * (1.0 - w),
                    parameters: CriticalParameters::Y {
                        y1: frac(t1 + t2 - t3),
                        y2: frac(-t3),
                    },
                });
            }
            if t1 <= t2 {
                out.push(CriticalPoint {
                    case_id: CriticalCase::BII,
                    permutation: perm,
                    lambda_value: 0.25 * (1.0 + w),
                    parameters: CriticalParameters::Y {
                        y1: frac(t3 - t1 - t2),
                        y2: frac(t3),
                    },
                });
            }
        }
    }
    out
}

/// Smallest critical value; equals `-max_negativity_su3 / 2` when the latter
/// is positive.
pub fn min_critical_value(s: &Spectrum3) -> f64 {
    critical_point_values(s)
        .iter()
        .map(|c| c.lambda_value)
        .fold(f64::INFINITY, f64::min)
}

/// Hilbert-Schmidt distance to the maximally mixed symmetric state,
/// `sqrt(max(0, Tr rho^2 - 1/(2s+1)))`, computed as `||rho - I/(N+1)||_F`.
pub fn radius(rho: &SymmetricDensityMatrix) -> f64 {
    let d = rho.n_qubits() + 1;
    let m = rho.matrix().as_matrix();
    let mut s = 0.0;
    for i in 0..d {
        for j in 0..d {
            let mut z = m[(i, j)];
            if i == j {
                z.re -= 1.0 / d as f64;
            }
            s += z.norm_sqr();
        }
    }
    s.sqrt()
}

/// `r^2 = 2/3 + 2 (t2^2 + t3^2 + t2 t3 - t2 - t3)`.
pub fn r_of_spectrum(s: &Spectrum3) -> f64 {
    let [_, t2, t3] = *s.values();
    let r2 = 2.0 / 3.0 + 2.0 * (t2 * t2 + t3 * t3 + t2 * t3 - t2 - t3);
    r2.max(0.0).sqrt()
}

/// SAS boundary in the `(tau_3, r)` plane, `sqrt(2/3) [1 + 3 (t3 - sqrt t3)]`.
pub fn sas_boundary_r(tau3: f64) -> Result<f64> {
    let (lo, hi) = (1.0 / 9.0, 1.0 / 3.0);
    if !(lo - TOL.boundary..=hi + TOL.boundary).contains(&tau3) {
        return Err(Error::Domain(format!("tau3 = {tau3} outside [1/9, 1/3]")));
    }
    let t = tau3.clamp(lo, hi);
    Ok((2.0f64 / 3.0).sqrt() * (1.0 + 3.0 * (t - t.sqrt())))
}

/// Lower bound on the radius of the largest SAS ball for spin `s`:
/// `1 / sqrt((4s+2) [(4s+1) C(4s, 2s) - (s+1)])`.
pub fn r_sas_lower_bound(spin: f64) -> f64 {
    let four_s = (4.0 * spin).round() as u64;
    let two_s = four_s / 2;
    let binom = (0..two_s).fold(1.0, |acc, i| acc * (four_s - i) as f64 / (i + 1) as f64);
    1.0 / ((4.0 * spin + 2.0) * ((4.0 * spin + 1.0) * binom - (spin + 1.0))).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallRadii2 {
    /// Radius of the largest ball of SAS states, `1/(2 sqrt 6)`.
    pub r_sas: f64,
    /// Radius of the smallest ball containing every SAS state, `2/(3 sqrt 6)`.
    pub big_r_sas: f64,
    /// Spin-1 value of [`r_sas_lower_bound`], `1/(2 sqrt 42)`.
    pub r_lower_bound: f64,
}

pub fn ball_radii_2qubit() -> BallRadii2 {
    let s6 = 6f64.sqrt();
    BallRadii2 {
        r_sas: 1.0 / (2.0 * s6),
        big_r_sas: 2.0 / (3.0 * s6),
        r_lower_bound: 1.0 / (2.0 * 42f64.sqrt()),
    }
}

/// Numerical extrema of [`sas_boundary_r`] over `[1/9, 1/3]` by dense scan
/// followed by golden-section refinement. Returns `(min, argmin, max, argmax)`.
pub fn sas_boundary_extrema() -> (f64, f64, f64, f64) {
    let (lo, hi) = (1.0 / 9.0, 1.0 / 3.0);
    let f = |t: f64| sas_boundary_r(t).expect("inside domain");
    let (tmin, vmin) = crate::optimize::minimize_scalar(f, lo, hi, 1000);
    let (tmax, neg_max) = crate::optimize::minimize_scalar(|t| -f(t), lo, hi, 1000);
    (vmin, tmin, -neg_max, tmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{concurrence_symmetric, negativity, negativity_symmetric};
    use crate::rng::seeded;
    use crate::symmetric::embed_full;

    fn s3(a: f64, b: f64, c: f64) -> Spectrum3 {
        Spectrum3::new([a, b, c]).unwrap()
    }

    fn s4(a: f64, b: f64, c: f64, d: f64) -> Spectrum4 {
        Spectrum4::new([a, b, c, d]).unwrap()
    }

    #[test]
    fn su4_maximum_examples() {
        assert_eq!(max_negativity_su4(&s4(1.0, 0.0, 0.0, 0.0)), 1.0);
        assert_eq!(max_negativity_su4(&s4(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0)), 0.0);
        let v = max_negativity_su4(&s4(0.5, 0.25, 0.15, 0.1));
        // sqrt(0.35^2 + 0.15^2) - 0.35
        assert!((v - (0.145f64.sqrt() - 0.35)).abs() < 1e-15);
        assert!((v - 0.0307887).abs() < 1e-7);
    }

    #[test]
    fn su4_absolute_separability() {
        assert!(is_as_su4(&s4(0.25, 0.25, 0.25, 0.25)));
        assert!(is_as_su4(&s4(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0)));
        let s = s4(0.4, 0.3, 0.2, 0.1);
        assert!(is_as_su4(&s));
        assert_eq!(max_negativity_su4(&s), 0.0);
        assert!(!is_as_su4(&s4(0.9, 0.1, 0.0, 0.0)));
    }

    #[test]
    fn johnston_examples() {
        assert!(johnston_as(&[0.25; 4], 2).unwrap());
        assert!(!johnston_as(&[0.9, 0.1, 0.0, 0.0], 2).unwrap());
        assert!(johnston_as(&[0.5, 0.5], 1).is_err());
        assert!(johnston_as(&[0.25; 4], 3).is_err());
        assert!(johnston_as(&[0.1, 0.2, 0.3, 0.4], 2).is_err());
        assert!(johnston_as(&[0.5, 0.3, 0.1, 0.0], 2).is_err());
    }

    #[test]
    fn johnston_agrees_with_su4_condition_for_two_qubits() {
        let mut rng = seeded(30);
        for _ in 0..2000 {
            let s = Spectrum4::random(&mut rng);
            let v = s.values();
            // for m = 2 the two criteria coincide away from the boundary
            let a = johnston_as(v, 2).unwrap();
            let margin = v[2] + 2.0 * (v[1] * v[3]).sqrt() - v[0];
            if margin.abs() > 1e-9 {
                assert_eq!(a, is_as_su4(&s));
            }
        }
    }

    #[test]
    fn su3_maximum_examples() {
        assert_eq!(max_negativity_su3(&s3(1.0, 0.0, 0.0)), 1.0);
        assert_eq!(max_negativity_su3(&s3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)), 0.0);
        assert!(max_negativity_su3(&s3(0.5, 0.25, 0.25)) <= 1e-15);
        assert!(max_negativity_su3(&s3(4.0 / 9.0, 4.0 / 9.0, 1.0 / 9.0)) <= 1e-15);
    }

    #[test]
    fn optimal_state_examples() {
        let rho = optimal_state(&s3(1.0, 0.0, 0.0));
        assert_eq!(rho, SymmetricDensityMatrix::dicke_projector(2, 1).unwrap());
        assert!((negativity_symmetric(&rho).negativity - 1.0).abs() < 1e-14);

        let rho = optimal_state(&s3(0.5, 0.3, 0.2));
        assert_eq!(
            rho,
            SymmetricDensityMatrix::dicke_diagonal(2, &[0.2, 0.5, 0.3]).unwrap()
        );
        assert!((negativity_symmetric(&rho).negativity - 0.009902).abs() < 1e-6);

        let rho = optimal_state(&s3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
        assert_eq!(rho, SymmetricDensityMatrix::maximally_mixed(2).unwrap());
        assert_eq!(negativity_symmetric(&rho).negativity, 0.0);
    }

    #[test]
    fn optimal_state_realises_the_maximum() {
        let mut rng = seeded(31);
        for _ in 0..1000 {
            let s = Spectrum3::random(&mut rng);
            let rho = optimal_state(&s);
            let n = negativity(&embed_full(&rho)).unwrap().negativity;
            assert!((n - max_negativity_su3(&s)).abs() < 1e-10);
            let c = concurrence_symmetric(&rho).unwrap();
            assert!((c - max_concurrence_su3(&s)).abs() < 1e-10, "{s:?}: {c}");
        }
    }

    #[test]
    fn concurrence_examples() {
        assert_eq!(max_concurrence_su3(&s3(1.0, 0.0, 0.0)), 1.0);
        assert!(max_concurrence_su3(&s3(0.5, 0.25, 0.25)).abs() < 1e-15);
        let c = max_concurrence_su3(&s3(0.6, 0.3, 0.1));
        assert!((c - 0.253590).abs() < 1e-6);
    }

    #[test]
    fn sas_examples() {
        assert!(is_sas(&s3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)));
        assert!(is_sas(&s3(4.0 / 9.0, 4.0 / 9.0, 1.0 / 9.0)));
        assert!(is_sas(&s3(0.5, 0.25, 0.25)));
        assert!(!is_sas(&s3(0.5, 0.5, 0.0)));
        assert!(!is_sas(&s3(0.6, 0.4, 0.0)));
    }

    #[test]
    fn sas_iff_zero_maximum() {
        let mut rng = seeded(32);
        for _ in 0..10_000 {
            let s = Spectrum3::random(&mut rng);
            assert_eq!(is_sas(&s), max_negativity_su3(&s) == 0.0, "{s:?}");
        }
    }

    #[test]
    fn critical_point_minimum_examples() {
        let m = min_critical_value(&s3(0.5, 0.3, 0.2));
        assert!((m - 0.5 * (0.5 - 0.26f64.sqrt())).abs() < 1e-15);
        assert!((m + 0.0049510).abs() < 1e-7);
        let m = min_critical_value(&s3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
        assert!((m - 1.0 / 6.0).abs() < 1e-15);
        let pts = critical_point_values(&s3(0.7, 0.2, 0.1));
        let aiv: Vec<_> = pts.iter().filter(|c| c.case_id == CriticalCase::AIV).collect();
        assert_eq!(aiv.len(), 6);
        assert!(aiv.iter().all(|c| c.lambda_value == 0.5));
    }

    #[test]
    fn case_b_requires_real_root() {
        // t1 t2 = 0.7 * 0.2 > 1/8: no real critical point
        let pts = critical_point_values(&s3(0.7, 0.2, 0.1));
        assert!(!pts.iter().any(|c| {
            matches!(c.case_id, CriticalCase::BI | CriticalCase::BII)
                && c.permutation[..2].contains(&0)
                && c.permutation[..2].contains(&1)
        }));
    }

    /// Lambda recomputed from the X-matrix eigenvalues at the stored
    /// parameters (independent of the closed forms above).
    fn lambda_from_parameters(c: &CriticalPoint, s: &Spectrum3) -> Option<f64> {
        let [t1, t2, t3] = c.weights(s);
        match c.parameters {
            CriticalParameters::Z(Some(z)) => {
                let q = (1.0 - z * z).max(0.0).sqrt();
                let xi = [0.5 * (1.0 + q), 0.5 * z, 0.5 * (1.0 - q)];
                Some(t3 * xi[0] + t1 * xi[1] + t2 * xi[2])
            }
            CriticalParameters::Y {
                y1: Some(y1),
                y2: Some(y2),
            } => {
                let q = (2.0 * (1.0 + y1 * y1 - 2.0 * y2 * y2)).max(0.0).sqrt();
                let xi = [
                    0.25 * (1.0 + y1 - q),
                    0.25 * (1.0 + y1 + q),
                    0.25 * (1.0 - y1 + 2.0 * y2),
                ];
                Some(t1 * xi[0] + t2 * xi[1] + t3 * xi[2])
            }
            _ => None,
        }
    }

    #[test]
    fn critical_values_match_their_parameters() {
        let mut rng = seeded(33);
        for _ in 0..1000 {
            let s = Spectrum3::random(&mut rng);
            for c in critical_point_values(&s) {
                if let Some(l) = lambda_from_parameters(&c, &s) {
                    assert!((l - c.lambda_value).abs() < 1e-12, "{c:?}");
                }
            }
        }
    }

    #[test]
    fn minimum_over_critical_points_is_closed_form_value() {
        let mut rng = seeded(34);
        for _ in 0..1000 {
            let s = Spectrum3::random(&mut rng);
            let [t1, t2, t3] = *s.values();
            let want = 0.5 * (t2 + t3 - (t1 * t1 + (t2 - t3).powi(2)).sqrt());
            assert!((min_critical_value(&s) - want).abs() < 1e-10);
            if max_negativity_su3(&s) > 0.0 {
                assert!((min_critical_value(&s) + max_negativity_su3(&s) / 2.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn radius_examples() {
        for n in [2, 3] {
            let rho0 = SymmetricDensityMatrix::maximally_mixed(n).unwrap();
            assert_eq!(radius(&rho0), 0.0);
        }
        let pure2 = SymmetricDensityMatrix::dicke_projector(2, 0).unwrap();
        assert!((radius(&pure2) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        let pure3 = SymmetricDensityMatrix::dicke_projector(3, 1).unwrap();
        assert!((radius(&pure3) - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn r_of_spectrum_examples() {
        assert!(r_of_spectrum(&s3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)) < 1e-7);
        let s6 = 6f64.sqrt();
        assert!((r_of_spectrum(&s3(0.5, 0.25, 0.25)) - 1.0 / (2.0 * s6)).abs() < 1e-15);
        assert!((r_of_spectrum(&s3(4.0 / 9.0, 4.0 / 9.0, 1.0 / 9.0)) - 2.0 / (3.0 * s6)).abs() < 1e-15);
        let mut rng = seeded(35);
        for _ in 0..1000 {
            let s = Spectrum3::random(&mut rng);
            assert!((r_of_spectrum(&s) - radius(&optimal_state(&s))).abs() < 1e-12);
        }
    }

    #[test]
    fn boundary_curve_values() {
        let s6 = 6f64.sqrt();
        assert!((sas_boundary_r(1.0 / 9.0).unwrap() - 2.0 / (3.0 * s6)).abs() < 1e-15);
        assert!((sas_boundary_r(0.25).unwrap() - 1.0 / (2.0 * s6)).abs() < 1e-15);
        // at tau3 = 1/3 the curve sits at sqrt(2/3)(2 - sqrt 3), above the
        // wedge apex r = 0
        let t = (2.0f64 / 3.0).sqrt() * (2.0 - 3f64.sqrt());
        assert!((sas_boundary_r(1.0 / 3.0).unwrap() - t).abs() < 1e-15);
        assert!(sas_boundary_r(0.1).is_err());
        assert!(sas_boundary_r(0.34).is_err());
    }

    #[test]
    fn boundary_curve_is_decreasing_then_increasing() {
        let grid: Vec<f64> = (0..=1000).map(|i| 1.0 / 9.0 + i as f64 * (2.0 / 9.0) / 1000.0).collect();
        for w in grid.windows(2) {
            let (a, b) = (sas_boundary_r(w[0]).unwrap(), sas_boundary_r(w[1]).unwrap());
            if w[1] <= 0.25 {
                assert!(b < a);
            } else if w[0] >= 0.25 {
                assert!(b > a);
            }
        }
    }

    #[test]
    fn boundary_curve_matches_sas_edge_of_spectra() {
        // sqrt(t2) + sqrt(t3) = 1 traced for t3 in [1/9, 1/4] lands on the curve
        for i in 0..=100 {
            let t3 = 1.0 / 9.0 + i as f64 * (0.25 - 1.0 / 9.0) / 100.0;
            let t2 = (1.0 - t3.sqrt()).powi(2);
            let s = Spectrum3::new([1.0 - t2 - t3, t2, t3]).unwrap();
            assert!((r_of_spectrum(&s) - sas_boundary_r(t3).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn ball_radii_values() {
        let b = ball_radii_2qubit();
        assert!((b.r_sas - 0.2041241).abs() < 1e-7);
        assert!((b.big_r_sas - 0.2721655).abs() < 1e-7);
        assert!((b.r_lower_bound - 0.0771517).abs() < 1e-7);
        assert!(b.r_sas < b.big_r_sas);
        assert!((r_sas_lower_bound(1.0) - b.r_lower_bound).abs() < 1e-15);
        assert!((r_sas_lower_bound(1.5) - 1.0 / (10.0 * 11f64.sqrt())).abs() < 1e-15);
        let (vmin, _, vmax, _) = sas_boundary_extrema();
        assert!((vmin - b.r_sas).abs() < 1e-9);
        assert!((vmax - b.big_r_sas).abs() < 1e-9);
    }

    #[test]
    fn symmetric_orbit_is_inside_full_orbit() {
        let mut rng = seeded(36);
        for _ in 0..1000 {
            let s = Spectrum3::random(&mut rng);
            let padded = Spectrum4::from_slice(&s.padded(4)).unwrap();
            assert!(max_negativity_su4(&padded) >= max_negativity_su3(&s) - 1e-15);
        }
    }
}
