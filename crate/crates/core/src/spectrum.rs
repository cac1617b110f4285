//! Sorted, normalised eigenvalue lists.

use std::fmt;

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::error::{Error, Result};
use crate::tolerance::TOL;

/// Probabilities sorted non-ascending, summing to one.
#[derive(Clone, Copy, PartialEq)]
pub struct Spectrum<const N: usize>([f64; N]);

/// Spectrum of a symmetric two-qubit state (tau_1 >= tau_2 >= tau_3).
pub type Spectrum3 = Spectrum<3>;
/// Spectrum of a general two-qubit state (lambda_1 >= ... >= lambda_4).
pub type Spectrum4 = Spectrum<4>;
/// Spectrum of a symmetric three-qubit state (tau_1 >= ... >= tau_4).
pub type Spectrum4Sym = Spectrum<4>;

impl<const N: usize> Spectrum<N> {
    /// Sorts and renormalises `values`.
    ///
    /// Entries in `[-1e-9, 0)` are clamped to zero; anything more negative is
    /// rejected, as is a sum further than `1e-9` from one.
    pub fn new(values: [f64; N]) -> Result<Self> {
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::Spectrum(format!("non-finite entry in {values:?}")));
        }
        if let Some(&x) = values.iter().find(|&&x| x < -TOL.negative_entry) {
            return Err(Error::Spectrum(format!("negative entry {x}")));
        }
        let mut v = values.map(|x| x.max(0.0));
        let sum: f64 = v.iter().sum();
        if (sum - 1.0).abs() > TOL.spectrum_renormalize {
            return Err(Error::Spectrum(format!(
                "entries sum to {sum}, not 1 (correction exceeds {:e})",
                TOL.spectrum_renormalize
            )));
        }
        for x in &mut v {
            *x /= sum;
        }
        v.sort_by(|a, b| b.total_cmp(a));
        Ok(Self(v))
    }

    pub fn from_slice(values: &[f64]) -> Result<Self> {
        let arr: [f64; N] = values.try_into().map_err(|_| {
            Error::Spectrum(format!("expected {N} entries, got {}", values.len()))
        })?;
        Self::new(arr)
    }

    pub fn values(&self) -> &[f64; N] {
        &self.0
    }

    /// One-based access, matching the tau_k / lambda_k labelling.
    pub fn get(&self, k: usize) -> f64 {
        self.0[k - 1]
    }

    pub fn purity(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Hilbert-Schmidt distance to the maximally mixed spectrum.
    pub fn radius(&self) -> f64 {
        let c = 1.0 / N as f64;
        self.0.iter().map(|x| (x - c).powi(2)).sum::<f64>().sqrt()
    }

    /// The spectrum padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<f64> {
        let mut v = self.0.to_vec();
        v.resize(len.max(N), 0.0);
        v
    }

    /// Flat-Dirichlet (uniform on the simplex) draw, sorted.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let e: [f64; N] = std::array::from_fn(|_| Exp1.sample(rng));
        let sum: f64 = e.iter().sum();
        Self::new(e.map(|x| x / sum)).expect("normalised Dirichlet draw")
    }
}

impl<const N: usize> fmt::Debug for Spectrum<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spectrum{:?}", self.0)
    }
}

impl<const N: usize> fmt::Display for Spectrum<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
