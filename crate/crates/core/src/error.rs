use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |m[i][j] - conj(m[j][i])| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary: max |U U^dagger - I| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("invalid dimension: {0}")]
    Dimension(String),

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    #[error("invalid spectrum: {0}")]
    Spectrum(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("negative radicand {value:e} in {context}")]
    NegativeRadicand { value: f64, context: &'static str },

    #[error("unsupported number of qubits: {0} (expected 2 or 3)")]
    UnsupportedQubits(usize),

    #[error("objective {objective} is not defined for {n_qubits}-qubit states")]
    ObjectiveMismatch {
        objective: &'static str,
        n_qubits: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
