//! Anticommuting pairs of Hermitian involutions.
//!
//! A pair of n-by-n complex matrices (A, B) with
//!
//! ```text
//! A = A*,  B = B*,  A^2 = B^2 = I,  AB + BA = 0
//! ```
//!
//! has rigid structure: n must be even, the spectrum of each member
//! splits into equal +1 and -1 eigenspaces which the other member
//! exchanges, the product AB is a unitary square root of -I, and the
//! combination N = A + iB squares to zero. That rigidity makes the
//! matrix exponential of anything built from the pair available in
//! closed form, which in turn makes every computation here checkable
//! against a generic exponential.
//!
//! The crate provides:
//!
//! - [`matrix`]: a dense row-major complex matrix with the handful of
//!   operations the rest of the crate needs (products, adjoints,
//!   Kronecker and direct sums, determinants, Frobenius norms);
//! - [`pair`]: verification and certification of candidate pairs,
//!   exact and randomized generators, a constructive partner for any
//!   balanced involution, and three dimension-raising lifts;
//! - [`closed_form`]: the closed-form exponentials, the anticommutator
//!   power series behind them, and the conjugation identities;
//! - [`eig`], [`expm`]: the self-contained numerical kernels (a cyclic
//!   Jacobi eigensolver for Hermitian matrices and a
//!   scaling-and-squaring exponential) used both by the constructions
//!   and as independent cross-checks in the tests;
//! - [`rng`]: a counter-based deterministic random source and
//!   Haar-distributed unitaries, so randomized runs are reproducible
//!   from a seed alone;
//! - [`io`]: a byte-deterministic JSON format for matrices and
//!   verification reports.

pub mod closed_form;
pub mod eig;
pub mod error;
pub mod expm;
pub mod io;
pub mod matrix;
pub mod pair;
pub mod rng;

pub use closed_form::{
    anticomm_series, conjugation_identities, exp_involution, exp_kron_pair, exp_nilpotent,
    exp_product, ConjugationResiduals, SeriesResult, SeriesTruncation,
};
pub use eig::{hermitian_eig, SpectralDecomposition};
pub use error::{Error, Result};
pub use expm::expm_oracle;
pub use io::{fmt_f64, read_matrix, read_report, write_matrix, write_report, ReportFile};
pub use matrix::{Complex64, ComplexMatrix};
pub use pair::{
    anticommutator, canonical_pair, derive_partner, lift_direct_sum, lift_kron, lift_star,
    nilpotent, pauli_chain_pair, random_pair, verify_pair, InvolutionPair, VerificationReport,
};
pub use rng::{haar_unitary, RandomSource};

/// Default verification tolerance for unit-scale inputs.
pub const DEFAULT_TOL: f64 = 1e-10;
