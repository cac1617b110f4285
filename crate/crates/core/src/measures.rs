//! Negativity and two-qubit concurrence.

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, eigenvalues_hermitian, min_eigenvalue, ComplexMatrix, HermitianMatrix, C64};
use crate::symmetric::{embed_full, embed_qubit_sym, partial_transpose, partial_transpose_qubit_factor, SymmetricDensityMatrix};
use crate::tolerance::TOL;

/// Minimal partial-transpose eigenvalue and the negativity derived from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTResult {
    pub lambda_min: f64,
    pub negativity: f64,
}

impl PTResult {
    pub fn from_lambda_min(lambda_min: f64) -> Self {
        Self {
            lambda_min,
            negativity: 2.0 * (-lambda_min).max(0.0),
        }
    }
}

fn validate_density(full: &HermitianMatrix) -> Result<()> {
    let tr = full.trace();
    if (tr - 1.0).abs() > TOL.trace {
        return Err(Error::NotDensityMatrix(format!("trace {tr}")));
    }
    let min = min_eigenvalue(full);
    if min < -TOL.psd {
        return Err(Error::NotDensityMatrix(format!(
            "negative eigenvalue {min:e}"
        )));
    }
    Ok(())
}

/// Negativity of a 4x4 or 8x8 density matrix, transposing qubit 0.
pub fn negativity(full: &HermitianMatrix) -> Result<PTResult> {
    if full.dim() != 4 && full.dim() != 8 {
        return Err(Error::Dimension(format!(
            "negativity needs dimension 4 or 8, got {}",
            full.dim()
        )));
    }
    validate_density(full)?;
    let pt = partial_transpose(full, 0)?;
    Ok(PTResult::from_lambda_min(min_eigenvalue(&pt)))
}

/// Minimal eigenvalue of the qubit-0 partial transpose restricted to
/// `C^2 (x) Sym^(N-1)`, the space carrying the transpose of any symmetric
/// state. For N = 2 this is the full 4x4 transpose; for N = 3 it is the
/// qubit-qutrit transpose, i.e. the 8x8 spectrum without its two
/// structural zeros.
pub fn pt_lambda_min_symmetric(rho: &SymmetricDensityMatrix) -> f64 {
    let op = embed_qubit_sym(rho);
    let pt = partial_transpose_qubit_factor(&op).expect("even dimension");
    min_eigenvalue(&pt)
}

/// Negativity of a symmetric state; identical to [`negativity`] of its
/// full embedding.
pub fn negativity_symmetric(rho: &SymmetricDensityMatrix) -> PTResult {
    PTResult::from_lambda_min(pt_lambda_min_symmetric(rho))
}

/// `Y (x) Y` in the computational product basis.
fn spin_flip() -> ComplexMatrix {
    let mut yy = ComplexMatrix::zeros(4, 4);
    yy[(0, 3)] = C64::new(-1.0, 0.0);
    yy[(1, 2)] = C64::new(1.0, 0.0);
    yy[(2, 1)] = C64::new(1.0, 0.0);
    yy[(3, 0)] = C64::new(-1.0, 0.0);
    yy
}

/// Eigenvalues below this are rounding noise of exact zeros (rank-deficient
/// states are the norm here); square roots would blow them up to ~1e-8.
const ROUNDING_FLOOR: f64 = 1e-15;

fn floored_sqrt(x: f64) -> f64 {
    if x < ROUNDING_FLOOR {
        0.0
    } else {
        x.sqrt()
    }
}

/// `mu_1 - mu_2 - mu_3 - mu_4` before clamping at zero, where the `mu` are
/// the square roots of the eigenvalues of `rho (Y(x)Y) rho^* (Y(x)Y)`,
/// obtained from the Hermitian form `sqrt(rho) rho~ sqrt(rho)`. Complex
/// conjugation is taken in the computational product basis.
pub(crate) fn concurrence_raw(full: &HermitianMatrix) -> f64 {
    let eig = eig_hermitian(full);
    let sqrt_d: Vec<f64> = eig.values.iter().map(|&l| floored_sqrt(l)).collect();
    let sqrt_rho = eig
        .vectors
        .conjugate(&ComplexMatrix::from_real_diagonal(&sqrt_d));
    let yy = spin_flip();
    let flipped = yy.conjugate(&full.as_matrix().conj());
    let m = HermitianMatrix::symmetrized(&sqrt_rho.conjugate(&flipped));
    let mu: Vec<f64> = eigenvalues_hermitian(&m)
        .into_iter()
        .map(floored_sqrt)
        .collect();
    mu[0] - mu[1] - mu[2] - mu[3]
}

/// Spin-flip concurrence of a 4x4 density matrix.
pub fn concurrence(full: &HermitianMatrix) -> Result<f64> {
    if full.dim() != 4 {
        return Err(Error::Dimension(format!(
            "concurrence needs a 4x4 matrix, got {}x{}",
            full.dim(),
            full.dim()
        )));
    }
    validate_density(full)?;
    Ok(concurrence_raw(full).max(0.0))
}

pub fn concurrence_symmetric(rho: &SymmetricDensityMatrix) -> Result<f64> {
    if rho.n_qubits() != 2 {
        return Err(Error::ObjectiveMismatch {
            objective: "concurrence",
            n_qubits: rho.n_qubits(),
        });
    }
    Ok(concurrence_raw(&embed_full(rho)).max(0.0))
}
