//! Tabulated scans and their CSV/JSON forms.
//!
//! Numbers are written as `{:.16e}` (17 significant digits), so parsing an
//! emitted file and writing it again reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridMetadata {
    pub resolution: usize,
    pub seed: u64,
    pub tool_version: String,
}

/// A scalar field sampled on the lattice points of a 2-parameter region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridResult {
    pub axis_names: [String; 2],
    pub rows: Vec<(f64, f64, f64)>,
    pub metadata: GridMetadata,
}

/// A curve or auxiliary series with named columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_table(header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.into_iter().map(format_number))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("ascii output"))
}

fn read_table(text: &str) -> CliResult<(Vec<String>, Vec<Vec<f64>>)> {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>().map_err(|e| CliError::Parse(format!("{f:?}: {e}"))))
            .collect::<CliResult<Vec<f64>>>()?;
        if row.len() != header.len() {
            return Err(CliError::Parse(format!(
                "row with {} fields under a {}-column header",
                row.len(),
                header.len()
            )));
        }
        rows.push(row);
    }
    Ok((header, rows))
}

impl GridResult {
    pub fn new(axis_names: [&str; 2], rows: Vec<(f64, f64, f64)>, resolution: usize, seed: u64) -> Self {
        Self {
            axis_names: axis_names.map(str::to_owned),
            rows,
            metadata: GridMetadata {
                resolution,
                seed,
                tool_version: VERSION.to_owned(),
            },
        }
    }

    /// Header `x,y,value`, one lattice point per line. Metadata lives in the
    /// JSON form only.
    pub fn to_csv(&self) -> CliResult<String> {
        write_table(
            &[&self.axis_names[0], &self.axis_names[1], "value"],
            self.rows.iter().map(|&(x, y, v)| vec![x, y, v]),
        )
    }

    /// Inverse of [`GridResult::to_csv`]; metadata is not carried by CSV and
    /// comes from the caller.
    pub fn from_csv(text: &str, metadata: GridMetadata) -> CliResult<Self> {
        let (header, rows) = read_table(text)?;
        if header.len() != 3 || header[2] != "value" {
            return Err(CliError::Parse(format!("unexpected header {header:?}")));
        }
        Ok(Self {
            axis_names: [header[0].clone(), header[1].clone()],
            rows: rows.into_iter().map(|r| (r[0], r[1], r[2])).collect(),
            metadata,
        })
    }

    pub fn value_at(&self, x: f64, y: f64, tol: f64) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| (r.0 - x).abs() <= tol && (r.1 - y).abs() <= tol)
            .map(|r| r.2)
    }
}

impl Series {
    pub fn new(columns: &[&str], rows: Vec<Vec<f64>>) -> Self {
        Self {
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            rows,
        }
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let header: Vec<&str> = self.columns.iter().map(String::as_str).collect();
        write_table(&header, self.rows.iter().cloned())
    }

    pub fn from_csv(text: &str) -> CliResult<Self> {
        let (columns, rows) = read_table(text)?;
        Ok(Self { columns, rows })
    }
}

/// Figure data: the main grid plus its boundary series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure {
    pub grid: GridResult,
    pub boundary: Series,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_keep_seventeen_digits() {
        assert_eq!(format_number(1.0), "1.0000000000000000e0");
        assert_eq!(format_number(-0.1), "-1.0000000000000001e-1");
        let x = 0.1 + 0.2;
        assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn csv_round_trip_is_byte_identical() {
        let g = GridResult::new(
            ["tau3", "tau2"],
            vec![(0.0, 0.0, 1.0), (1.0 / 3.0, 1.0 / 3.0, 0.0), (0.1, 0.45, 0.123_456_789_012_345_68)],
            3,
            7,
        );
        let a = g.to_csv().unwrap();
        assert!(a.starts_with("tau3,tau2,value\n"));
        assert!(!a.contains('\r'));
        let back = GridResult::from_csv(&a, g.metadata.clone()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_csv().unwrap(), a);
    }

    #[test]
    fn malformed_csv_is_rejected() {
        let meta = GridMetadata { resolution: 2, seed: 0, tool_version: VERSION.into() };
        assert!(GridResult::from_csv("a,b,c\n1,2,3\n", meta.clone()).is_err());
        assert!(GridResult::from_csv("a,b,value\n1,x,3\n", meta).is_err());
    }
}
