//! Reference matrix exponential by scaling and squaring.
//!
//! The argument is halved until its Frobenius norm is at most 1/2, the
//! Taylor series is summed at that scale (each term is a factor of at
//! least 1/(2k) smaller than its predecessor, so convergence to double
//! precision takes under twenty terms), and the result is squared back
//! up. Serves as the independent check every closed-form exponential in
//! this crate is compared against.
//!
//! An argument with Frobenius norm in the hundreds needs ten or more
//! squarings, and each doubling amplifies the round-off of everything
//! before it; in ordinary precision that swamps the 1e-12 agreements
//! this oracle is asked to certify. Beyond a fixed squaring count the
//! whole computation therefore runs in double-word arithmetic: every
//! intermediate matrix is carried as an unevaluated sum of a leading
//! and a trailing part, preserving roughly twice working precision
//! until the final fold. The slow representation only engages where the
//! matrices are small, so it costs nothing on the common path.

use crate::error::Result;
use crate::matrix::{Complex64, ComplexMatrix};

const SCALE_TARGET: f64 = 0.5;
const TERM_TOL: f64 = 1e-18;
const MAX_TERMS: usize = 60;
const DOUBLE_WORD_SQUARINGS: u32 = 8;

/// Knuth branch-free exact addition: s + e == a + b with s = fl(a + b).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bv = s - a;
    (s, (a - (s - bv)) + (b - bv))
}

/// Dekker exact multiplication via 27-bit splitting: p + e == a * b with
/// p = fl(a * b). Valid far beyond the magnitudes this crate handles.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let p = a * b;
    let ta = SPLITTER * a;
    let a_hi = ta - (ta - a);
    let a_lo = a - a_hi;
    let tb = SPLITTER * b;
    let b_hi = tb - (tb - b);
    let b_lo = b - b_hi;
    let err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo;
    (p, err)
}

/// Fold one exact product into a compensated running sum.
fn accumulate(sum: &mut f64, err: &mut f64, x: f64, y: f64) {
    let (p, product_err) = two_prod(x, y);
    let (s, sum_err) = two_sum(*sum, p);
    *sum = s;
    *err += product_err + sum_err;
}

/// Matrix product of two leading words, returned as the rounded result
/// plus the exact element-wise residual the rounding discarded.
fn matmul_with_residual(lhs: &ComplexMatrix, rhs: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let rows = lhs.rows();
    let cols = rhs.cols();
    let inner = lhs.cols();
    let mut value = ComplexMatrix::zeros(rows, cols);
    let mut residual = ComplexMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let (mut sum_re, mut err_re) = (0.0f64, 0.0f64);
            let (mut sum_im, mut err_im) = (0.0f64, 0.0f64);
            for k in 0..inner {
                let a = lhs[(i, k)];
                let b = rhs[(k, j)];
                accumulate(&mut sum_re, &mut err_re, a.re, b.re);
                accumulate(&mut sum_re, &mut err_re, -a.im, b.im);
                accumulate(&mut sum_im, &mut err_im, a.re, b.im);
                accumulate(&mut sum_im, &mut err_im, a.im, b.re);
            }
            value[(i, j)] = Complex64::new(sum_re, sum_im);
            residual[(i, j)] = Complex64::new(err_re, err_im);
        }
    }
    (value, residual)
}

/// Matrix held as the unevaluated sum `hi + lo`, with `lo` kept below
/// one unit in the last place of `hi` entry by entry.
struct DoubleWord {
    hi: ComplexMatrix,
    lo: ComplexMatrix,
}

impl DoubleWord {
    fn from_single(m: ComplexMatrix) -> Self {
        let lo = ComplexMatrix::zeros(m.rows(), m.cols());
        Self { hi: m, lo }
    }

    fn renormalized(hi: ComplexMatrix, lo: ComplexMatrix) -> Self {
        let mut h = hi;
        let mut l = lo;
        for i in 0..h.rows() {
            for j in 0..h.cols() {
                let a = h[(i, j)];
                let b = l[(i, j)];
                let (s_re, e_re) = two_sum(a.re, b.re);
                let (s_im, e_im) = two_sum(a.im, b.im);
                h[(i, j)] = Complex64::new(s_re, s_im);
                l[(i, j)] = Complex64::new(e_re, e_im);
            }
        }
        Self { hi: h, lo: l }
    }

    fn mul(&self, rhs: &DoubleWord) -> Self {
        let (value, residual) = matmul_with_residual(&self.hi, &rhs.hi);
        // cross terms are already down at the trailing scale, so plain
        // arithmetic is enough for them; lo * lo is below eps^2 and dropped
        let cross = &self.hi.matmul(&rhs.lo) + &self.lo.matmul(&rhs.hi);
        Self::renormalized(value, &residual + &cross)
    }

    fn add(&self, rhs: &DoubleWord) -> Self {
        let rows = self.hi.rows();
        let cols = self.hi.cols();
        let mut h = ComplexMatrix::zeros(rows, cols);
        let mut l = ComplexMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let a = self.hi[(i, j)];
                let b = rhs.hi[(i, j)];
                let (s_re, e_re) = two_sum(a.re, b.re);
                let (s_im, e_im) = two_sum(a.im, b.im);
                let al = self.lo[(i, j)];
                let bl = rhs.lo[(i, j)];
                h[(i, j)] = Complex64::new(s_re, s_im);
                l[(i, j)] = Complex64::new(al.re + bl.re + e_re, al.im + bl.im + e_im);
            }
        }
        Self::renormalized(h, l)
    }

    /// Division by a small positive integer via the exact remainder of
    /// the rounded leading quotient.
    fn div_int(&self, k: f64) -> Self {
        fn component(hi: f64, lo: f64, k: f64) -> (f64, f64) {
            let q = hi / k;
            let (p, p_err) = two_prod(q, k);
            let remainder = (hi - p) - p_err;
            (q, (remainder + lo) / k)
        }
        let rows = self.hi.rows();
        let cols = self.hi.cols();
        let mut h = ComplexMatrix::zeros(rows, cols);
        let mut l = ComplexMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let a = self.hi[(i, j)];
                let b = self.lo[(i, j)];
                let (q_re, t_re) = component(a.re, b.re, k);
                let (q_im, t_im) = component(a.im, b.im, k);
                h[(i, j)] = Complex64::new(q_re, q_im);
                l[(i, j)] = Complex64::new(t_re, t_im);
            }
        }
        Self::renormalized(h, l)
    }

    fn fold(self) -> ComplexMatrix {
        &self.hi + &self.lo
    }
}

/// exp(X) for any square complex matrix.
pub fn expm_oracle(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = x.require_square()?;
    let norm = x.frobenius_norm();
    let squarings = if norm <= SCALE_TARGET {
        0
    } else {
        (norm / SCALE_TARGET).log2().ceil() as u32
    };
    // scaling by a power of two is exact
    let scaled = x.scale(Complex64::new((0.5f64).powi(squarings as i32), 0.0));

    if squarings >= DOUBLE_WORD_SQUARINGS {
        let seed = DoubleWord::from_single(scaled);
        let mut sum = DoubleWord::from_single(ComplexMatrix::identity(n));
        let mut term = DoubleWord::from_single(ComplexMatrix::identity(n));
        for k in 1..=MAX_TERMS {
            term = term.mul(&seed).div_int(k as f64);
            let term_norm = term.hi.frobenius_norm();
            sum = sum.add(&term);
            if term_norm < TERM_TOL * sum.hi.frobenius_norm() {
                break;
            }
        }
        let mut result = sum;
        for _ in 0..squarings {
            result = result.mul(&result);
        }
        return Ok(result.fold());
    }

    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=MAX_TERMS {
        term = term
            .matmul(&scaled)
            .scale(Complex64::new(1.0 / k as f64, 0.0));
        let term_norm = term.frobenius_norm();
        sum = &sum + &term;
        if term_norm < TERM_TOL * sum.frobenius_norm() {
            break;
        }
    }

    let mut result = sum;
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    Ok(result)
}
