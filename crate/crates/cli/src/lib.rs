//! Library half of the `symsep` command: figure grids, classification,
//! radii and verification reports.

use serde::Serialize;

pub mod classify;
pub mod error;
pub mod figures;
pub mod grid;
pub mod radii;
pub mod verify;

pub use error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Quick,
    Full,
}
