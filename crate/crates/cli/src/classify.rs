//! Spectrum classification report.

use std::fmt;

use serde::Serialize;

use symsep_core::orbit::{orbit_maximize, Objective, OrbitSearchConfig};
use symsep_core::three_qubit::{dicke_mixture_state, lambda_min_obs1, not_sas_3qubit};
use symsep_core::two_qubit::{is_sas, max_negativity_su3, r_of_spectrum};
use symsep_core::{Spectrum3, Spectrum4Sym};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Sas,
    NotSas,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub n_qubits: usize,
    pub spectrum: Vec<f64>,
    /// Closed-form orbit maximum (two qubits only).
    pub max_negativity: Option<f64>,
    /// Negativity found by orbit search (three qubits only); a lower bound.
    pub orbit_search_negativity: Option<f64>,
    /// Smallest partial-transpose eigenvalue of the Dicke mixture (three
    /// qubits only).
    pub dicke_mixture_lambda_min: Option<f64>,
    pub dicke_mixture_test: Option<bool>,
    pub verdict: Verdict,
    /// The spectrum sits on the SAS boundary (two qubits).
    pub on_boundary: bool,
    pub radius: f64,
    pub note: String,
}

const ENTANGLED: f64 = 1e-9;

pub fn classify(values: &[f64], n_qubits: usize, seed: u64) -> CliResult<ClassifyReport> {
    match n_qubits {
        2 => {
            let s = Spectrum3::from_slice(values)?;
            let n = max_negativity_su3(&s);
            let sas = is_sas(&s);
            let [_, t2, t3] = *s.values();
            let on_boundary = (t2.sqrt() + t3.sqrt() - 1.0).abs() <= 1e-12;
            let note = match (sas, on_boundary) {
                (true, true) => "SAS (boundary)".to_owned(),
                (true, false) => "SAS".to_owned(),
                _ => "not SAS".to_owned(),
            };
            Ok(ClassifyReport {
                n_qubits,
                spectrum: s.values().to_vec(),
                max_negativity: Some(n),
                orbit_search_negativity: None,
                dicke_mixture_lambda_min: None,
                dicke_mixture_test: None,
                verdict: if sas { Verdict::Sas } else { Verdict::NotSas },
                on_boundary,
                radius: r_of_spectrum(&s),
                note,
            })
        }
        3 => {
            let s = Spectrum4Sym::from_slice(values)?;
            let caught = not_sas_3qubit(&s);
            let lambda = lambda_min_obs1(&s)?;
            let cfg = OrbitSearchConfig {
                n_ascent_restarts: 8,
                ..OrbitSearchConfig::default()
            }
            .with_seed(seed);
            let found = orbit_maximize(&dicke_mixture_state(&s), Objective::Negativity, &cfg)?.best_value;
            let (verdict, note) = if caught {
                (Verdict::NotSas, "not SAS: the Dicke mixture is entangled".to_owned())
            } else if found > ENTANGLED {
                (
                    Verdict::NotSas,
                    format!("undetermined by the Dicke-mixture test; orbit search found negativity {found:.3e} > 0 => not SAS"),
                )
            } else {
                (
                    Verdict::Undetermined,
                    "undetermined by the Dicke-mixture test; orbit search found no entanglement".to_owned(),
                )
            };
            Ok(ClassifyReport {
                n_qubits,
                spectrum: s.values().to_vec(),
                max_negativity: None,
                orbit_search_negativity: Some(found),
                dicke_mixture_lambda_min: Some(lambda),
                dicke_mixture_test: Some(caught),
                verdict,
                on_boundary: false,
                radius: s.radius(),
                note,
            })
        }
        n => Err(CliError::Usage(format!("--qubits must be 2 or 3, got {n}"))),
    }
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec: Vec<String> = self.spectrum.iter().map(|x| format!("{x}")).collect();
        writeln!(f, "spectrum (sorted): {}", spec.join(" "))?;
        if let Some(n) = self.max_negativity {
            writeln!(f, "max negativity:    {n:.6}")?;
        }
        if let Some(l) = self.dicke_mixture_lambda_min {
            writeln!(f, "Dicke mixture:     lambda_min = {l:.6e}")?;
        }
        if let Some(n) = self.orbit_search_negativity {
            writeln!(f, "orbit search:      negativity >= {n:.6e}")?;
        }
        writeln!(f, "verdict:           {}", self.note)?;
        write!(f, "radius r:          {:.6}", self.radius)
    }
}
