//! Closed-form matrix exponentials for anticommuting involution pairs,
//! the anticommutator power series that generalizes them, and the
//! conjugation identities that follow.
//!
//! Every formula here reduces `exp` of a structured matrix to two
//! scalar special functions and one matrix product, so each can be
//! cross-checked against a generic scaling-and-squaring exponential.

use crate::error::{Error, Result};
use crate::matrix::{Complex64, ComplexMatrix};
use crate::pair::InvolutionPair;

/// `I cosh(z) + M sinh(z)` — the exponential of `zM` whenever `M`
/// squares to the identity, by splitting the power series into even
/// and odd parts.
fn hyperbolic_form(m: &ComplexMatrix, z: Complex64) -> ComplexMatrix {
    let n = m.rows();
    &ComplexMatrix::identity(n).scale(z.cosh()) + &m.scale(z.sinh())
}

/// Exponential of `z A` for a single involution: `I cosh(z) + A sinh(z)`.
/// The input must square to the identity within `tol` for the formula
/// to apply.
pub fn exp_involution(a: &ComplexMatrix, z: Complex64, tol: f64) -> Result<ComplexMatrix> {
    a.require_square()?;
    let residual = a.involution_residual();
    if residual > tol {
        return Err(Error::NotInvolution { residual, tol });
    }
    Ok(hyperbolic_form(a, z))
}

/// Exponential of `z AB` for a certified pair: `I cos(z) + AB sin(z)`.
/// The product of two anticommuting involutions squares to minus the
/// identity, so the series is trigonometric rather than hyperbolic.
pub fn exp_product(p: &InvolutionPair, z: Complex64) -> ComplexMatrix {
    let ab = p.a().matmul(p.b());
    let n = p.dim();
    &ComplexMatrix::identity(n).scale(z.cos()) + &ab.scale(z.sin())
}

/// Exponential of `z (A (x) B)`: the tensor product of two involutions
/// is again an involution, so the hyperbolic form applies in dimension
/// n^2.
pub fn exp_kron_pair(p: &InvolutionPair, z: Complex64) -> ComplexMatrix {
    hyperbolic_form(&p.a().kron(p.b()), z)
}

/// Exponential of `z N` for `N = A + iB`: since `N` squares to zero
/// the series terminates, `exp(zN) = I + zN`.
pub fn exp_nilpotent(p: &InvolutionPair, z: Complex64) -> ComplexMatrix {
    let n = crate::pair::nilpotent(p);
    &ComplexMatrix::identity(p.dim()) + &n.scale(z)
}

/// Truncation policy for the anticommutator series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTruncation {
    /// Cap on the number of series terms kept (the constant term counts).
    pub max_terms: usize,
    /// Stop once the next term's norm drops below this times the norm
    /// of the partial sum.
    pub term_tol: f64,
}

impl Default for SeriesTruncation {
    fn default() -> Self {
        SeriesTruncation {
            max_terms: 40,
            term_tol: 1e-16,
        }
    }
}

/// Outcome of summing the anticommutator series.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    /// The partial sum.
    pub value: ComplexMatrix,
    /// Number of terms the sum actually holds.
    pub terms: usize,
    /// Whether the term-size stopping rule fired before the cap.
    pub converged: bool,
}

/// Sum `e^X Y e^X = sum_k (1/k!) {X, .}^k (Y)` by iterating the
/// anticommutator: each term is `{X, previous} / k`. The next term is
/// measured before it is added, so when `X` and `Y` anticommute the
/// first-order term already vanishes and `Y` comes back untouched.
pub fn anticomm_series(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    truncation: SeriesTruncation,
) -> Result<SeriesResult> {
    let n = x.require_square()?;
    let m = y.require_square()?;
    if n != m {
        return Err(Error::DimensionMismatch {
            left_rows: n,
            left_cols: n,
            right_rows: m,
            right_cols: m,
        });
    }
    let mut sum = y.clone();
    let mut term = y.clone();
    let mut terms = 1;
    let mut converged = false;
    for k in 1..truncation.max_terms {
        term = (&x.matmul(&term) + &term.matmul(x)).scale(Complex64::new(1.0 / k as f64, 0.0));
        if term.frobenius_norm() <= truncation.term_tol * sum.frobenius_norm() {
            converged = true;
            break;
        }
        sum = &sum + &term;
        terms += 1;
    }
    Ok(SeriesResult {
        value: sum,
        terms,
        converged,
    })
}

/// Residuals of the three conjugation identities a certified pair
/// satisfies, each measured in Frobenius norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugationResiduals {
    /// || e^A B e^-A  -  B e^-2A ||
    pub right_form: f64,
    /// || e^A B e^-A  -  e^2A B ||
    pub left_form: f64,
    /// || e^-A  -  B e^A B ||
    pub inverse_form: f64,
}

impl ConjugationResiduals {
    pub fn max_residual(&self) -> f64 {
        self.right_form.max(self.left_form).max(self.inverse_form)
    }
}

/// Check the conjugation identities: conjugating B by e^A flips the
/// exponential to the other side (`e^A B e^-A = B e^-2A = e^2A B`), and
/// B exchanges e^A with its inverse (`e^-A = B e^A B`). All three
/// follow from pushing B through powers of A one anticommutation at a
/// time.
pub fn conjugation_identities(p: &InvolutionPair) -> ConjugationResiduals {
    let one = Complex64::new(1.0, 0.0);
    let e_a = hyperbolic_form(p.a(), one);
    let e_neg_a = hyperbolic_form(p.a(), -one);
    let e_2a = hyperbolic_form(p.a(), Complex64::new(2.0, 0.0));
    let e_neg_2a = hyperbolic_form(p.a(), Complex64::new(-2.0, 0.0));
    let sandwich = e_a.matmul(p.b()).matmul(&e_neg_a);
    ConjugationResiduals {
        right_form: sandwich.frobenius_distance(&p.b().matmul(&e_neg_2a)),
        left_form: sandwich.frobenius_distance(&e_2a.matmul(p.b())),
        inverse_form: e_neg_a.frobenius_distance(&p.b().matmul(&e_a).matmul(p.b())),
    }
}
