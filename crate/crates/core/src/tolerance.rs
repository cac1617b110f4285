//! Numerical tolerances shared by every module.
//!
//! Property tests and validation paths read from [`TOL`] so that a single
//! record controls how strict the library is.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Per-entry absolute Hermiticity deviation accepted on input.
    pub hermitian: f64,
    /// Max entrywise deviation of `U U^dagger` from the identity.
    pub unitary: f64,
    /// Deviation accepted on `|det U| = 1`.
    pub determinant: f64,
    /// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below
    /// this value times `max(1, ||m||_F)`.
    pub jacobi_off_diagonal: f64,
    /// Trace of a full-space density matrix must equal one within this.
    pub trace: f64,
    /// Trace of a symmetric-sector density matrix must equal one within this.
    pub symmetric_trace: f64,
    /// Eigenvalues of a density matrix must be at least `-psd`.
    pub psd: f64,
    /// Spectra must sum to one within this after construction.
    pub spectrum_sum: f64,
    /// Largest normalisation correction a spectrum constructor accepts.
    pub spectrum_renormalize: f64,
    /// Entries below `-negative_entry` are rejected when building spectra.
    pub negative_entry: f64,
    /// Slack applied to boundary inequalities (boundary counts as inside).
    pub boundary: f64,
    /// A sampled orbit point counts as entangled when its negativity exceeds this.
    pub entangled: f64,
}

pub const TOL: Tolerances = Tolerances {
    hermitian: 1e-12,
    unitary: 1e-10,
    determinant: 1e-10,
    jacobi_off_diagonal: 1e-14,
    trace: 1e-10,
    symmetric_trace: 1e-12,
    psd: 1e-12,
    spectrum_sum: 1e-12,
    spectrum_renormalize: 1e-9,
    negative_entry: 1e-9,
    boundary: 1e-12,
    entangled: 1e-9,
};

impl Default for Tolerances {
    fn default() -> Self {
        TOL
    }
}
