//! Maximal entanglement over symmetric-sector unitary orbits of two- and
//! three-qubit states.
//!
//! States live in the Dicke basis of the symmetric subspace
//! ([`symmetric`]); [`two_qubit`] and [`three_qubit`] hold the closed forms,
//! and [`orbit`] is a stochastic search used to check them.
//!
//! Product-basis convention: qubit 0 is the most significant bit, bit value 0
//! is `|+>`, and `|D_N^(k)>` has `k` qubits in `|->`.

pub mod error;
pub mod linalg;
pub mod measures;
pub mod optimize;
pub mod orbit;
pub mod par;
pub mod rng;
pub mod spectrum;
pub mod symmetric;
pub mod three_qubit;
pub mod tolerance;
pub mod two_qubit;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, HermitianMatrix, UnitaryMatrix, C64};
pub use orbit::{Objective, OrbitSearchConfig, OrbitSearchResult};
pub use par::Exec;
pub use spectrum::{Spectrum, Spectrum3, Spectrum4, Spectrum4Sym};
pub use symmetric::SymmetricDensityMatrix;
