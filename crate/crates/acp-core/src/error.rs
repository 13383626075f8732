//! Error type shared across the crate.

use crate::pair::VerificationReport;

/// Everything that can go wrong in this crate, from shape mismatches to
/// genuine mathematical obstructions (odd dimension, unbalanced spectrum).
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A square matrix was required.
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    /// A matrix of one specific size was required.
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    BadDimension {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    /// Two operands whose shapes must agree did not.
    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    /// Matrix dimensions must be positive.
    #[error("matrix dimension must be positive")]
    ZeroDimension,

    /// Hermitian input required: ||X - X*||_F exceeded the tolerance.
    #[error("matrix is not hermitian: ||X - X*||_F = {residual:.3e} > {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    /// Involution required: ||X^2 - I||_F exceeded the tolerance.
    #[error("matrix is not an involution: ||X^2 - I||_F = {residual:.3e} > {tol:.3e}")]
    NotInvolution { residual: f64, tol: f64 },

    /// No pair of anticommuting involutions exists in odd dimension.
    #[error("no anticommuting involution pair exists in odd dimension {n}")]
    OddDimension { n: usize },

    /// The +1 and -1 eigenspaces must have equal dimension (zero trace).
    #[error("unbalanced spectrum: |trace| = {trace_abs:.3e} exceeds {bound:.3e}; \
             the +1 and -1 eigenspaces differ in dimension")]
    UnbalancedSpectrum { trace_abs: f64, bound: f64 },

    /// Chain generators only exist in power-of-two dimensions.
    #[error("chain generator requires a power-of-two dimension, got {n}")]
    NotPowerOfTwo { n: usize },

    /// The Jacobi eigensolver hit its sweep cap before the off-diagonal
    /// mass fell below the threshold.
    #[error("eigensolver did not converge after {sweeps} sweeps: \
             off-diagonal norm {off_diagonal:.3e} > {threshold:.3e}")]
    NoConvergence {
        sweeps: usize,
        off_diagonal: f64,
        threshold: f64,
    },

    /// A candidate pair failed certification; the full report says why.
    #[error("pair failed certification at tol {:.3e}: hermitian ({:.3e}, {:.3e}), \
             involution ({:.3e}, {:.3e}), anticommutator {:.3e}",
            report.tol, report.residual_hermitian_a, report.residual_hermitian_b,
            report.residual_involution_a, report.residual_involution_b,
            report.residual_anticommute)]
    CertificationFailed { report: VerificationReport },

    /// A non-finite value (NaN or infinity) where only finite doubles are
    /// admitted.
    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    /// Malformed input file.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Underlying I/O failure.
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
