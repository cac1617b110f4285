//! Dicke basis, symmetric-sector states and partial transposition.
//!
//! Product-basis convention: qubit 0 is the most significant bit of the
//! computational index, and bit value 0 is `|+>`, 1 is `|->`. The Dicke
//! state `|D_N^(k)>` is the normalised sum of all product strings with `k`
//! qubits in `|->`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_hermitian, ComplexMatrix, HermitianMatrix, UnitaryMatrix, C64};
use crate::tolerance::TOL;

fn check_qubits(n_qubits: usize) -> Result<()> {
    if (2..=3).contains(&n_qubits) {
        Ok(())
    } else {
        Err(Error::UnsupportedQubits(n_qubits))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DickeBasis {
    n_qubits: usize,
    /// `vectors[k]` holds the 2^N product-basis coefficients of `|D_N^(k)>`.
    vectors: Vec<Vec<f64>>,
}

impl DickeBasis {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k]
    }

    /// The `2^N x (N+1)` isometry whose columns are the Dicke vectors.
    pub fn isometry(&self) -> ComplexMatrix {
        let dim = 1 << self.n_qubits;
        ComplexMatrix::from_fn(dim, self.n_qubits + 1, |i, k| {
            C64::new(self.vectors[k][i], 0.0)
        })
    }
}

/// Dicke basis for one to three qubits. Only 2 and 3 are public through
/// [`dicke_basis`]; the one-qubit case is the computational basis and is
/// used for the qubit-times-symmetric-factor construction.
fn build_dicke(n_qubits: usize) -> DickeBasis {
    let dim = 1usize << n_qubits;
    let vectors = (0..=n_qubits)
        .map(|k| {
            let norm = (binomial(n_qubits, k) as f64).sqrt().recip();
            (0..dim)
                .map(|idx| {
                    if (idx as u32).count_ones() as usize == k {
                        norm
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    DickeBasis { n_qubits, vectors }
}

pub fn dicke_basis(n_qubits: usize) -> Result<DickeBasis> {
    check_qubits(n_qubits)?;
    Ok(build_dicke(n_qubits))
}

struct Embeddings {
    full: ComplexMatrix,
    qubit_sym: ComplexMatrix,
}

/// Cached isometries for N = 2, 3: the Dicke isometry into the full space,
/// and the isometry into `C^2 (x) Sym^(N-1)` (dimension 2N) obtained by
/// compressing with `I_2 (x) B_(N-1)`.
fn embeddings(n_qubits: usize) -> &'static Embeddings {
    static CACHE: [OnceLock<Embeddings>; 2] = [OnceLock::new(), OnceLock::new()];
    CACHE[n_qubits - 2].get_or_init(|| {
        let full = build_dicke(n_qubits).isometry();
        let rest = build_dicke(n_qubits - 1).isometry();
        let compress = ComplexMatrix::identity(2).kron(&rest);
        let qubit_sym = &compress.adjoint() * &full;
        Embeddings { full, qubit_sym }
    })
}

/// Symmetric-sector density matrix in the Dicke basis (dimension N+1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetricDensityMatrix {
    n_qubits: usize,
    matrix: HermitianMatrix,
}

impl SymmetricDensityMatrix {
    pub fn new(n_qubits: usize, matrix: HermitianMatrix) -> Result<Self> {
        check_qubits(n_qubits)?;
        if matrix.dim() != n_qubits + 1 {
            return Err(Error::Dimension(format!(
                "{n_qubits}-qubit symmetric state needs dimension {}, got {}",
                n_qubits + 1,
                matrix.dim()
            )));
        }
        let tr = matrix.trace();
        if (tr - 1.0).abs() > TOL.symmetric_trace {
            return Err(Error::NotDensityMatrix(format!("trace {tr}")));
        }
        let min = eigenvalues_hermitian(&matrix)
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min < -TOL.psd {
            return Err(Error::NotDensityMatrix(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { n_qubits, matrix })
    }

    /// `sum_k weights[k] |D_N^(k)><D_N^(k)|`.
    pub fn dicke_diagonal(n_qubits: usize, weights: &[f64]) -> Result<Self> {
        check_qubits(n_qubits)?;
        if weights.len() != n_qubits + 1 {
            return Err(Error::Dimension(format!(
                "expected {} Dicke weights, got {}",
                n_qubits + 1,
                weights.len()
            )));
        }
        Self::new(n_qubits, HermitianMatrix::from_real_diagonal(weights))
    }

    pub fn maximally_mixed(n_qubits: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let d = n_qubits + 1;
        Self::dicke_diagonal(n_qubits, &vec![1.0 / d as f64; d])
    }

    pub fn dicke_projector(n_qubits: usize, k: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        if k > n_qubits {
            return Err(Error::Dimension(format!("Dicke index {k} > {n_qubits}")));
        }
        let mut w = vec![0.0; n_qubits + 1];
        w[k] = 1.0;
        Self::dicke_diagonal(n_qubits, &w)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    /// `U rho U^dagger`; unitarity preserves validity, so no re-check.
    pub fn evolved(&self, u: &UnitaryMatrix) -> Self {
        assert_eq!(u.dim(), self.n_qubits + 1, "unitary/state size mismatch");
        Self {
            n_qubits: self.n_qubits,
            matrix: u.apply(&self.matrix),
        }
    }

    /// Sorted non-ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        eigenvalues_hermitian(&self.matrix)
    }

    pub fn purity(&self) -> f64 {
        self.matrix.trace_of_square()
    }

    /// Spin quantum number s = N/2.
    pub fn spin(&self) -> f64 {
        self.n_qubits as f64 / 2.0
    }
}

/// The state as a `2^N`-dimensional operator on the full qubit space.
pub fn embed_full(rho: &SymmetricDensityMatrix) -> HermitianMatrix {
    let b = &embeddings(rho.n_qubits()).full;
    HermitianMatrix::symmetrized(&b.conjugate(rho.matrix().as_matrix()))
}

/// The state as an operator on `C^2 (x) Sym^(N-1)(C^2)`, indexed
/// `a * N + j` with `a` the qubit-0 bit and `j` the Dicke index of the
/// remaining qubits. This space contains the support of `rho` and of its
/// partial transpose on qubit 0.
pub fn embed_qubit_sym(rho: &SymmetricDensityMatrix) -> HermitianMatrix {
    let e = &embeddings(rho.n_qubits()).qubit_sym;
    HermitianMatrix::symmetrized(&e.conjugate(rho.matrix().as_matrix()))
}

/// Partial transpose over qubit `cut` of a 4x4 (two-qubit) or 8x8
/// (three-qubit) operator.
pub fn partial_transpose(full: &HermitianMatrix, cut: usize) -> Result<HermitianMatrix> {
    let dim = full.dim();
    let n_qubits = match dim {
        4 => 2,
        8 => 3,
        _ => {
            return Err(Error::Dimension(format!(
                "partial transpose needs dimension 4 or 8, got {dim}"
            )))
        }
    };
    if cut >= n_qubits {
        return Err(Error::Dimension(format!(
            "cut qubit {cut} out of range for {n_qubits} qubits"
        )));
    }
    let bit = 1usize << (n_qubits - 1 - cut);
    let m = full.as_matrix();
    let out = ComplexMatrix::from_fn(dim, dim, |i, j| {
        let (i2, j2) = ((i & !bit) | (j & bit), (j & !bit) | (i & bit));
        m[(i2, j2)]
    });
    Ok(HermitianMatrix::symmetrized(&out))
}

/// Partial transpose over the qubit factor of an operator on
/// `C^2 (x) C^m` (dimension 2m, index `a * m + j`).
pub fn partial_transpose_qubit_factor(m: &HermitianMatrix) -> Result<HermitianMatrix> {
    let dim = m.dim();
    if !dim.is_multiple_of(2) {
        return Err(Error::Dimension(format!(
            "qubit-factor transpose needs even dimension, got {dim}"
        )));
    }
    let half = dim / 2;
    let a = m.as_matrix();
    let out = ComplexMatrix::from_fn(dim, dim, |i, j| {
        let (ai, ri) = (i / half, i % half);
        let (aj, rj) = (j / half, j % half);
        a[(aj * half + ri, ai * half + rj)]
    });
    Ok(HermitianMatrix::symmetrized(&out))
}

/// Matrix of the qubit permutation `perm` on `2^N` amplitudes:
/// factor `q` of the output carries factor `perm[q]` of the input.
pub fn qubit_permutation(perm: &[usize]) -> ComplexMatrix {
    let n = perm.len();
    let dim = 1usize << n;
    let mut p = ComplexMatrix::zeros(dim, dim);
    for idx in 0..dim {
        let mut out = 0usize;
        for (q, &src) in perm.iter().enumerate() {
            let b = (idx >> (n - 1 - src)) & 1;
            out |= b << (n - 1 - q);
        }
        p[(out, idx)] = C64::new(1.0, 0.0);
    }
    p
}
