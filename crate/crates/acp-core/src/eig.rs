//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each sweep visits every strict upper-triangle position (p, q) and
//! applies a unitary plane rotation that zeroes it: the entry's phase is
//! factored out first, which reduces the 2x2 subproblem to the classic
//! real symmetric rotation. Sweeps repeat until the off-diagonal mass is
//! negligible against the matrix norm. Convergence is quadratic once the
//! off-diagonal is small, so the hard sweep cap below is generous.

use crate::error::{Error, Result};
use crate::matrix::{Complex64, ComplexMatrix};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching orthonormal eigenvector
/// columns: `h = vectors * diag(values) * vectors^*`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// Decompose a Hermitian matrix. `tol` bounds both the accepted
/// Hermiticity defect (relative to ||h||_F) and the off-diagonal mass at
/// which the rotation sweeps stop.
pub fn hermitian_eig(h: &ComplexMatrix, tol: f64) -> Result<SpectralDecomposition> {
    let n = h.require_square()?;
    let norm = h.frobenius_norm();
    let hermitian_defect = h.hermitian_residual();
    if hermitian_defect > tol * norm {
        return Err(Error::NotHermitian {
            residual: hermitian_defect,
            tol: tol * norm,
        });
    }

    let mut work = h.clone();
    let mut vectors = ComplexMatrix::identity(n);
    let threshold = tol * norm;

    let mut sweeps = 0;
    while off_diagonal_norm(&work) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off_diagonal_norm(&work),
                threshold,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut work, &mut vectors, p, q);
            }
        }
        sweeps += 1;
    }

    // diagonal of the rotated matrix holds the eigenvalues (real up to
    // roundoff since Hermiticity is preserved by every rotation)
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| work[(i, i)].re).collect();
    order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]));
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let sorted_vectors = ComplexMatrix::from_fn(n, n, |i, j| vectors[(i, order[j])]);

    Ok(SpectralDecomposition {
        values,
        vectors: sorted_vectors,
    })
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One plane rotation zeroing `work[(p, q)]`, accumulated into `vectors`.
fn rotate(work: &mut ComplexMatrix, vectors: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = work[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    // factor out the phase so the remaining subproblem is real symmetric
    let phase = apq / r;
    let app = work[(p, p)].re;
    let aqq = work[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // rotation columns: (p) <- c * (p) - s * conj(phase) * (q)
    //                   (q) <- s * (p) + c * conj(phase) * (q)
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = phase.conj().scale(-s);
    let jqq = phase.conj().scale(c);

    let n = work.rows();
    // two-sided update work <- J^* work J, touching only rows/cols p, q
    for j in 0..n {
        let wpj = work[(p, j)];
        let wqj = work[(q, j)];
        work[(p, j)] = jpp.conj() * wpj + jqp.conj() * wqj;
        work[(q, j)] = jpq.conj() * wpj + jqq.conj() * wqj;
    }
    for i in 0..n {
        let wip = work[(i, p)];
        let wiq = work[(i, q)];
        work[(i, p)] = wip * jpp + wiq * jqp;
        work[(i, q)] = wip * jpq + wiq * jqq;
    }
    // exact zeros where the rotation was designed to cancel
    work[(p, q)] = Complex64::new(0.0, 0.0);
    work[(q, p)] = Complex64::new(0.0, 0.0);

    for i in 0..n {
        let vip = vectors[(i, p)];
        let viq = vectors[(i, q)];
        vectors[(i, p)] = vip * jpp + viq * jqp;
        vectors[(i, q)] = vip * jpq + viq * jqq;
    }
}
