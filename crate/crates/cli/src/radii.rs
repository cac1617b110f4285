//! Ball-radius report.

use std::fmt;

use serde::Serialize;

use symsep_core::three_qubit::{ball_radii_3qubit, estimate_r_sas_3qubit, RSasEstimate};
use symsep_core::two_qubit::ball_radii_2qubit;
use symsep_core::Exec;

use crate::error::{CliError, CliResult};
use crate::Scale;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub r_estimate: f64,
    pub spectrum: [f64; 4],
    pub n_spectra: usize,
    pub n_orbit_samples: usize,
    pub seed: u64,
    /// `[lower, upper]` the estimate is expected in.
    pub bracket: [f64; 2],
}

impl From<RSasEstimate> for Estimate {
    fn from(e: RSasEstimate) -> Self {
        Self {
            r_estimate: e.r_estimate,
            spectrum: e.spectrum,
            n_spectra: e.n_spectra,
            n_orbit_samples: e.n_orbit_samples,
            seed: e.seed,
            bracket: [0.168, ball_radii_3qubit().big_r_sas_upper],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiiReport {
    pub n_qubits: usize,
    /// Exact value (two qubits) or `[lower, upper)` bracket (three qubits).
    pub r_sas: Vec<f64>,
    /// Exact value (two qubits) or upper bound (three qubits).
    pub big_r_sas: f64,
    pub r_lower_bound: f64,
    pub estimate: Option<Estimate>,
}

/// `(spectra, orbit samples)` for the Monte-Carlo estimate.
pub fn estimate_budget(scale: Scale) -> (usize, usize) {
    match scale {
        Scale::Quick => (10_000, 100),
        Scale::Full => (10_000, 1_000),
    }
}

pub fn radii(n_qubits: usize, estimate: bool, scale: Scale, seed: u64, exec: Exec) -> CliResult<RadiiReport> {
    match n_qubits {
        2 => {
            let b = ball_radii_2qubit();
            Ok(RadiiReport {
                n_qubits,
                r_sas: vec![b.r_sas],
                big_r_sas: b.big_r_sas,
                r_lower_bound: b.r_lower_bound,
                estimate: None,
            })
        }
        3 => {
            let b = ball_radii_3qubit();
            let estimate = if estimate {
                let (n, m) = estimate_budget(scale);
                Some(estimate_r_sas_3qubit(n, m, seed, exec)?.into())
            } else {
                None
            };
            Ok(RadiiReport {
                n_qubits,
                r_sas: vec![b.r_sas_lower, b.r_sas_upper],
                big_r_sas: b.big_r_sas_upper,
                r_lower_bound: b.r_sas_lower,
                estimate,
            })
        }
        n => Err(CliError::Usage(format!("--qubits must be 2 or 3, got {n}"))),
    }
}

impl fmt::Display for RadiiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n_qubits == 2 {
            writeln!(f, "r_SAS = {:.6}", self.r_sas[0])?;
            writeln!(f, "R_SAS = {:.6}", self.big_r_sas)?;
            write!(f, "LB    = {:.6}", self.r_lower_bound)?;
        } else {
            writeln!(f, "r_SAS in [{:.6}, {:.6})", self.r_sas[0], self.r_sas[1])?;
            write!(f, "R_SAS <= {:.6}", self.big_r_sas)?;
            if let Some(e) = &self.estimate {
                write!(
                    f,
                    "\nR_SAS estimate = {:.6} ({} spectra x {} orbit samples, seed {}; expected in [{:.3}, {:.6}])",
                    e.r_estimate, e.n_spectra, e.n_orbit_samples, e.seed, e.bracket[0], e.bracket[1]
                )?;
            }
        }
        Ok(())
    }
}
