//! JSON file formats for matrices and verification reports.
//!
//! A matrix file declares its shape and stores entries row by row as
//! `[re, im]` pairs:
//!
//! ```json
//! {"rows": 2, "cols": 2, "data": [[[0.0, 0.0], [1.0, 0.0]],
//!                                 [[1.0, 0.0], [0.0, 0.0]]]}
//! ```
//!
//! Reads accept any whitespace layout but insist that the declared
//! shape matches the data, that every component is finite, and that no
//! unknown keys are present. Writes use a fixed layout — header, one
//! data row per line, shortest round-trip number formatting — so equal
//! matrices always produce byte-identical files, and every written
//! file reads back bit-for-bit, signed zeros and subnormals included.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Complex64, ComplexMatrix};
use crate::pair::VerificationReport;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    data: Vec<Vec<[f64; 2]>>,
}

/// On-disk form of a verification report. The residual fields mirror
/// [`VerificationReport`]; `version` records the library that wrote
/// the file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub residual_hermitian_a: f64,
    pub residual_hermitian_b: f64,
    pub residual_involution_a: f64,
    pub residual_involution_b: f64,
    pub residual_anticommute: f64,
    pub trace_ab_abs: f64,
    pub tol: f64,
    pub passed: bool,
    pub version: String,
}

impl ReportFile {
    pub fn from_report(report: &VerificationReport) -> Self {
        ReportFile {
            residual_hermitian_a: report.residual_hermitian_a,
            residual_hermitian_b: report.residual_hermitian_b,
            residual_involution_a: report.residual_involution_a,
            residual_involution_b: report.residual_involution_b,
            residual_anticommute: report.residual_anticommute,
            trace_ab_abs: report.trace_ab_abs,
            tol: report.tol,
            passed: report.passed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn residuals(&self) -> [f64; 5] {
        [
            self.residual_hermitian_a,
            self.residual_hermitian_b,
            self.residual_involution_a,
            self.residual_involution_b,
            self.residual_anticommute,
        ]
    }
}

fn parse_error(err: &serde_json::Error) -> Error {
    Error::Parse {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

/// Read a matrix file, validating shape and finiteness.
pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let file: MatrixFile = serde_json::from_str(&text).map_err(|e| parse_error(&e))?;
    if file.rows == 0 || file.cols == 0 {
        return Err(Error::ZeroDimension);
    }
    if file.data.len() != file.rows {
        return Err(Error::DimensionMismatch {
            left_rows: file.rows,
            left_cols: file.cols,
            right_rows: file.data.len(),
            right_cols: file.cols,
        });
    }
    for (i, row) in file.data.iter().enumerate() {
        if row.len() != file.cols {
            return Err(Error::DimensionMismatch {
                left_rows: file.rows,
                left_cols: file.cols,
                right_rows: file.data.len(),
                right_cols: file.data[i].len(),
            });
        }
    }
    let entries: Vec<Complex64> = file
        .data
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    // the JSON grammar cannot spell NaN or infinity and the number
    // parser rejects overflowing literals, but the constructor's
    // finiteness check stays on as defense in depth
    ComplexMatrix::new(file.rows, file.cols, entries)
}

/// Write a matrix file in the fixed byte-deterministic layout.
pub fn write_matrix(path: &Path, m: &ComplexMatrix) -> Result<()> {
    let mut out = String::new();
    out.push_str(&format!("{{\"rows\":{},\"cols\":{},\"data\":[\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        let row: Vec<[f64; 2]> = (0..m.cols())
            .map(|j| {
                let e = m[(i, j)];
                [e.re, e.im]
            })
            .collect();
        out.push_str(&serde_json::to_string(&row).expect("serializing finite floats"));
        out.push_str(if i + 1 < m.rows() { ",\n" } else { "\n" });
    }
    out.push_str("]}\n");
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Write a report as pretty-printed JSON with a stable field order.
pub fn write_report(path: &Path, report: &ReportFile) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("serializing finite floats");
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Read a report back, rejecting files whose pass flag contradicts the
/// recorded residuals and tolerance.
pub fn read_report(path: &Path) -> Result<ReportFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let file: ReportFile = serde_json::from_str(&text).map_err(|e| parse_error(&e))?;
    let consistent = file.passed == file.residuals().iter().all(|&r| r <= file.tol);
    if !consistent {
        return Err(Error::Parse {
            line: 0,
            column: 0,
            message: "pass flag contradicts the recorded residuals and tolerance".into(),
        });
    }
    Ok(file)
}

/// Format a float exactly as the file formats do (shortest
/// round-tripping decimal), for console output that should match the
/// files byte for byte.
pub fn fmt_f64(x: f64) -> String {
    serde_json::to_string(&x).expect("serializing a finite float")
}
