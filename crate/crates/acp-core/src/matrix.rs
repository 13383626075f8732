//! Dense complex matrices with the handful of structural operations the
//! rest of the crate is built on: arithmetic, Kronecker products, direct
//! sums, the 4x4 star embedding, determinants and Frobenius norms.
//!
//! Matrices are immutable values in practice: every operation returns a
//! fresh matrix, so sharing across threads needs no synchronization.

use num_complex::Complex;

use crate::error::{Error, Result};

/// Double-precision complex scalar used throughout.
pub type Complex64 = Complex<f64>;

/// Dense row-major complex matrix with positive dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Matrix of zeros. Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// The n x n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = ComplexMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from nested row slices. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        assert!(!rows.is_empty(), "matrix dimensions must be positive");
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have the same length"
        );
        ComplexMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j])
    }

    /// Validating constructor for externally supplied data: checks the
    /// entry count and rejects NaN/infinity, the one invariant every
    /// matrix in this crate maintains.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension);
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                left_rows: rows,
                left_cols: cols,
                right_rows: entries.len() / cols.max(1),
                right_cols: cols,
            });
        }
        for (idx, e) in entries.iter().enumerate() {
            if !e.re.is_finite() || !e.im.is_finite() {
                return Err(Error::NonFinite {
                    row: idx / cols,
                    col: idx % cols,
                });
            }
        }
        Ok(ComplexMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Flat row-major view of the entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Matrix product. Panics if the inner dimensions disagree.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product requires inner dimensions to agree"
        );
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let aik = self.entries[i * self.cols + k];
                if aik.re == 0.0 && aik.im == 0.0 {
                    continue;
                }
                let rhs_row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, r) in out_row.iter_mut().zip(rhs_row) {
                    *o += aik * r;
                }
            }
        }
        out
    }

    /// Entrywise scaling by a complex factor.
    pub fn scale(&self, z: Complex64) -> ComplexMatrix {
        self.map(|e| e * z)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> ComplexMatrix {
        self.map(|e| e.conj())
    }

    /// Sum of the diagonal. Panics on non-square input.
    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm: sqrt of the sum of squared entry magnitudes.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius norm of the difference. Panics if shapes disagree.
    pub fn frobenius_distance(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "frobenius_distance requires equal shapes"
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// ||X - X*||_F, zero exactly when the matrix is Hermitian.
    pub fn hermitian_residual(&self) -> f64 {
        assert!(self.is_square(), "hermitian_residual requires a square matrix");
        self.frobenius_distance(&self.adjoint())
    }

    /// ||X^2 - I||_F, zero exactly when the matrix squares to the identity.
    pub fn involution_residual(&self) -> f64 {
        assert!(self.is_square(), "involution_residual requires a square matrix");
        self.matmul(self)
            .frobenius_distance(&ComplexMatrix::identity(self.rows))
    }

    /// Kronecker product: block (i, j) of the result is `self[(i, j)] * rhs`.
    pub fn kron(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let factor = self[(i, j)];
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        out[(i * rhs.rows + p, j * rhs.cols + q)] = factor * rhs[(p, q)];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal direct sum of two square matrices.
    pub fn direct_sum(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.require_square()?;
        let m = rhs.require_square()?;
        let mut out = ComplexMatrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..m {
            for j in 0..m {
                out[(n + i, n + j)] = rhs[(i, j)];
            }
        }
        Ok(out)
    }

    /// Star embedding of a 2x2 matrix into 4x4: the entries are spread
    /// onto the pattern
    ///
    /// ```text
    /// ( x11  .    .    x12 )
    /// ( .    x11  x12  .   )
    /// ( .    x21  x22  .   )
    /// ( x21  .    .    x22 )
    /// ```
    ///
    /// which is the direct sum X (+) X conjugated by the permutation
    /// sending basis indices (1,2,3,4) to (1,4,2,3).
    pub fn star_embed(&self) -> Result<ComplexMatrix> {
        if (self.rows, self.cols) != (2, 2) {
            return Err(Error::BadDimension {
                expected: 2,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (x11, x12) = (self[(0, 0)], self[(0, 1)]);
        let (x21, x22) = (self[(1, 0)], self[(1, 1)]);
        let mut out = ComplexMatrix::zeros(4, 4);
        out[(0, 0)] = x11;
        out[(0, 3)] = x12;
        out[(1, 1)] = x11;
        out[(1, 2)] = x12;
        out[(2, 1)] = x21;
        out[(2, 2)] = x22;
        out[(3, 0)] = x21;
        out[(3, 3)] = x22;
        Ok(out)
    }

    /// Determinant by LU factorization with partial pivoting; a singular
    /// matrix yields exactly zero.
    pub fn determinant(&self) -> Result<Complex64> {
        let n = self.require_square()?;
        let mut lu = self.entries.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            // pick the largest remaining pivot in this column
            let pivot_row = (col..n)
                .max_by(|&a, &b| {
                    lu[a * n + col]
                        .norm_sqr()
                        .total_cmp(&lu[b * n + col].norm_sqr())
                })
                .unwrap();
            let pivot = lu[pivot_row * n + col];
            if pivot.re == 0.0 && pivot.im == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if pivot_row != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            det *= pivot;
            for row in col + 1..n {
                let factor = lu[row * n + col] / pivot;
                for j in col + 1..n {
                    let sub = factor * lu[col * n + j];
                    lu[row * n + j] -= sub;
                }
            }
        }
        Ok(det)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix addition requires equal shapes"
        );
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix subtraction requires equal shapes"
        );
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl std::ops::Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// The three Pauli matrices, the 2x2 building blocks for every chain
/// construction in this crate.
pub mod pauli {
    use super::{Complex64, ComplexMatrix};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// sigma1 = ((0, 1), (1, 0))
    pub fn sigma1() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
    }

    /// sigma2 = ((0, -i), (i, 0))
    pub fn sigma2() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
    }

    /// sigma3 = ((1, 0), (0, -1))
    pub fn sigma3() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ])
    }
}
