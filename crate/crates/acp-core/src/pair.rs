//! Pairs of Hermitian involutions that anticommute: certification,
//! generators, the constructive partner, and the dimension-raising
//! lifts. Such pairs only exist in even dimension — `AB = -BA` with
//! invertible factors forces `det(-I) = 1` — and every generator here
//! enforces that up front.

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::matrix::pauli::{sigma1, sigma3};
use crate::matrix::{Complex64, ComplexMatrix};
use crate::rng::{haar_unitary, RandomSource};

/// Eigenvalues this close to +1 or -1 are assigned to that eigenspace
/// when the constructive partner groups them.
const CLUSTER_WINDOW: f64 = 1e-6;

/// Certification tolerance used by the exact generators, scaled like
/// the default verification tolerance.
fn scaled_default_tol(a: &ComplexMatrix) -> f64 {
    crate::DEFAULT_TOL * a.frobenius_norm().max(1.0)
}

/// Residuals of the five defining conditions of an anticommuting
/// Hermitian involution pair, plus the trace of the product (always a
/// diagnostic, never part of the pass decision).
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// ||A - A*||_F
    pub residual_hermitian_a: f64,
    /// ||B - B*||_F
    pub residual_hermitian_b: f64,
    /// ||A^2 - I||_F
    pub residual_involution_a: f64,
    /// ||B^2 - I||_F
    pub residual_involution_b: f64,
    /// ||AB + BA||_F
    pub residual_anticommute: f64,
    /// |tr(AB)|, which vanishes for a true pair
    pub trace_ab_abs: f64,
    /// true iff all five residuals are at most `tol`
    pub passed: bool,
    /// tolerance the residuals were compared against
    pub tol: f64,
}

impl VerificationReport {
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

/// Compute all residuals for a candidate pair. Works on any pair of
/// equal-size square matrices; the judgment is in the report.
pub fn verify_pair(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<VerificationReport> {
    let n = a.require_square()?;
    let m = b.require_square()?;
    if n != m {
        return Err(Error::DimensionMismatch {
            left_rows: n,
            left_cols: n,
            right_rows: m,
            right_cols: m,
        });
    }
    let ab = a.matmul(b);
    let ba = b.matmul(a);
    let report = VerificationReport {
        residual_hermitian_a: a.hermitian_residual(),
        residual_hermitian_b: b.hermitian_residual(),
        residual_involution_a: a.involution_residual(),
        residual_involution_b: b.involution_residual(),
        residual_anticommute: (&ab + &ba).frobenius_norm(),
        trace_ab_abs: ab.trace().norm(),
        passed: false,
        tol,
    };
    let passed = report.residuals().iter().all(|&r| r <= tol);
    Ok(VerificationReport { passed, ..report })
}

/// A certified anticommuting pair: construction went through
/// `certify`, so the five conditions hold within `certified_tol` and
/// the dimension is even.
#[derive(Debug, Clone)]
pub struct InvolutionPair {
    a: ComplexMatrix,
    b: ComplexMatrix,
    n: usize,
    certified_tol: f64,
}

impl InvolutionPair {
    /// Verify a candidate pair and wrap it on success.
    pub fn certify(a: ComplexMatrix, b: ComplexMatrix, tol: f64) -> Result<Self> {
        let n = a.require_square()?;
        require_even(n)?;
        let report = verify_pair(&a, &b, tol)?;
        if !report.passed {
            return Err(Error::CertificationFailed { report });
        }
        Ok(InvolutionPair {
            a,
            b,
            n,
            certified_tol: tol,
        })
    }

    pub fn a(&self) -> &ComplexMatrix {
        &self.a
    }

    pub fn b(&self) -> &ComplexMatrix {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn certified_tol(&self) -> f64 {
        self.certified_tol
    }

    /// Fresh residuals for this pair at its certification tolerance.
    pub fn report(&self) -> VerificationReport {
        verify_pair(&self.a, &self.b, self.certified_tol)
            .expect("certified pairs have matching square factors")
    }
}

fn require_even(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n % 2 != 0 {
        return Err(Error::OddDimension { n });
    }
    Ok(())
}

/// The reference pair in dimension n: A is diag(+1 ... +1, -1 ... -1)
/// and B swaps the two half-spaces, `B = sum_j (e_j e_{j+n/2}^* +
/// e_{j+n/2} e_j^*)`. All entries are exact, so every residual is zero.
pub fn canonical_pair(n: usize) -> Result<InvolutionPair> {
    require_even(n)?;
    let half = n / 2;
    let a = ComplexMatrix::from_fn(n, n, |i, j| {
        if i != j {
            Complex64::new(0.0, 0.0)
        } else if i < half {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(-1.0, 0.0)
        }
    });
    let mut b = ComplexMatrix::zeros(n, n);
    for j in 0..half {
        b[(j, j + half)] = Complex64::new(1.0, 0.0);
        b[(j + half, j)] = Complex64::new(1.0, 0.0);
    }
    let tol = scaled_default_tol(&a);
    InvolutionPair::certify(a, b, tol)
}

/// Pauli-chain pair in dimension 2^k: start from (sigma1, -sigma2) and
/// repeatedly tensor sigma3 on the left. The sigma3 factor squares to
/// the identity, so each step preserves all five conditions exactly.
pub fn pauli_chain_pair(n: usize) -> Result<InvolutionPair> {
    require_even(n)?;
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { n });
    }
    let mut a = sigma1();
    // -sigma2 written out entrywise: negating sigma2 would turn its zero
    // entries into negative zeros and stamp "-0.0" into generated files
    let mut b = ComplexMatrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)],
        vec![Complex64::new(0.0, -1.0), Complex64::new(0.0, 0.0)],
    ]);
    while a.rows() < n {
        a = sigma3().kron(&a);
        b = sigma3().kron(&b);
    }
    let tol = scaled_default_tol(&a);
    InvolutionPair::certify(a, b, tol)
}

/// Random pair: conjugate the canonical pair by a Haar-random unitary.
/// Certified at the caller's tolerance.
pub fn random_pair(n: usize, rng: &mut RandomSource, tol: f64) -> Result<InvolutionPair> {
    require_even(n)?;
    let base = canonical_pair(n)?;
    let u = haar_unitary(n, rng);
    let u_adj = u.adjoint();
    let a = u.matmul(base.a()).matmul(&u_adj);
    let b = u.matmul(base.b()).matmul(&u_adj);
    InvolutionPair::certify(a, b, tol)
}

/// Construct an anticommuting partner for a traceless Hermitian
/// involution: eigendecompose, pair the j-th +1 eigenvector with the
/// j-th -1 eigenvector, and sum the exchange operators
/// `v_+ v_-^* + v_- v_+^*`. The result maps each eigenspace of `a`
/// onto the other, which is exactly the anticommutation condition.
pub fn derive_partner(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    require_even(n)?;
    let involution_defect = a.involution_residual();
    if involution_defect > tol {
        return Err(Error::NotInvolution {
            residual: involution_defect,
            tol,
        });
    }
    let trace_abs = a.trace().norm();
    if trace_abs > tol * n as f64 {
        return Err(Error::UnbalancedSpectrum {
            trace_abs,
            bound: tol * n as f64,
        });
    }

    let decomposition = hermitian_eig(a, tol)?;
    let mut minus: Vec<Vec<Complex64>> = Vec::new();
    let mut plus: Vec<Vec<Complex64>> = Vec::new();
    for (idx, &lambda) in decomposition.values.iter().enumerate() {
        let column: Vec<Complex64> = (0..n).map(|i| decomposition.vectors[(i, idx)]).collect();
        if (lambda + 1.0).abs() <= CLUSTER_WINDOW {
            minus.push(column);
        } else if (lambda - 1.0).abs() <= CLUSTER_WINDOW {
            plus.push(column);
        } else {
            return Err(Error::NotInvolution {
                residual: (lambda * lambda - 1.0).abs(),
                tol: CLUSTER_WINDOW,
            });
        }
    }
    if minus.len() != plus.len() {
        return Err(Error::UnbalancedSpectrum {
            trace_abs: (plus.len() as f64 - minus.len() as f64).abs(),
            bound: tol * n as f64,
        });
    }

    // re-orthonormalize inside each (possibly degenerate) cluster
    orthonormalize(&mut minus);
    orthonormalize(&mut plus);

    let mut b = ComplexMatrix::zeros(n, n);
    for (vp, vm) in plus.iter().zip(&minus) {
        for i in 0..n {
            for j in 0..n {
                b[(i, j)] += vp[i] * vm[j].conj() + vm[i] * vp[j].conj();
            }
        }
    }
    Ok(b)
}

/// Modified Gram-Schmidt on a set of near-orthonormal columns.
fn orthonormalize(columns: &mut [Vec<Complex64>]) {
    for j in 0..columns.len() {
        for k in 0..j {
            let proj: Complex64 = columns[k]
                .iter()
                .zip(&columns[j])
                .map(|(x, y)| x.conj() * y)
                .sum();
            for i in 0..columns[j].len() {
                let sub = proj * columns[k][i];
                columns[j][i] -= sub;
            }
        }
        let norm: f64 = columns[j]
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt();
        for e in columns[j].iter_mut() {
            *e /= norm;
        }
    }
}

/// Tensor an involution onto both members: (C (x) A, C (x) B). Requires
/// C Hermitian with C^2 = I within `tol`; the result is re-certified at
/// ten times the looser of the two input tolerances.
pub fn lift_kron(c: &ComplexMatrix, p: &InvolutionPair, tol: f64) -> Result<InvolutionPair> {
    c.require_square()?;
    let hermitian_defect = c.hermitian_residual();
    if hermitian_defect > tol {
        return Err(Error::NotHermitian {
            residual: hermitian_defect,
            tol,
        });
    }
    let involution_defect = c.involution_residual();
    if involution_defect > tol {
        return Err(Error::NotInvolution {
            residual: involution_defect,
            tol,
        });
    }
    let a = c.kron(p.a());
    let b = c.kron(p.b());
    InvolutionPair::certify(a, b, 10.0 * tol.max(p.certified_tol()))
}

/// Double both members block-diagonally: (A (+) A, B (+) B). This
/// cannot fail: each residual of the doubled pair is exactly sqrt(2)
/// times the original, far inside the tenfold re-certification margin.
pub fn lift_direct_sum(p: &InvolutionPair) -> InvolutionPair {
    let a = p.a().direct_sum(p.a()).expect("pair members are square");
    let b = p.b().direct_sum(p.b()).expect("pair members are square");
    InvolutionPair::certify(a, b, 10.0 * p.certified_tol())
        .expect("direct sum of a certified pair stays certified")
}

/// Star-embed both members of a 2x2 pair into 4x4. The star pattern is
/// a permuted direct sum, so certification carries over exactly.
pub fn lift_star(p: &InvolutionPair) -> Result<InvolutionPair> {
    let a = p.a().star_embed()?;
    let b = p.b().star_embed()?;
    InvolutionPair::certify(a, b, 10.0 * p.certified_tol())
}

/// The rank-halving combination N = A + iB. It squares to zero because
/// the cross terms form the anticommutator, and it is maximally
/// non-normal: N*N - NN* = 4iAB with Frobenius norm 4 sqrt(n).
pub fn nilpotent(p: &InvolutionPair) -> ComplexMatrix {
    p.a() + &p.b().scale(Complex64::new(0.0, 1.0))
}

/// The anticommutator XY + YX of two equal-size square matrices.
pub fn anticommutator(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
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
    Ok(&x.matmul(y) + &y.matmul(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::pauli::{sigma1, sigma2, sigma3};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn textbook_pair() -> InvolutionPair {
        // (sigma1, -sigma2) is exact, every residual is literally zero
        InvolutionPair::certify(sigma1(), -&sigma2(), 1e-12).unwrap()
    }

    #[test]
    fn verify_accepts_the_sigma_pair_with_zero_residuals() {
        let report = verify_pair(&sigma1(), &-&sigma2(), 1e-10).unwrap();
        assert!(report.passed);
        assert_eq!(report.residuals(), [0.0; 5]);
        assert_eq!(report.trace_ab_abs, 0.0);
    }

    #[test]
    fn verify_rejects_a_matrix_paired_with_itself() {
        // sigma1 with itself: {A, A} = 2I, norm 2 sqrt(2)
        let report = verify_pair(&sigma1(), &sigma1(), 1e-10).unwrap();
        assert!(!report.passed);
        assert_eq!(report.residual_anticommute, 8.0_f64.sqrt());
        assert_eq!(report.residual_involution_a, 0.0);
    }

    #[test]
    fn verify_rejects_identity_with_identity() {
        let id = ComplexMatrix::identity(2);
        let report = verify_pair(&id, &id, 1e-10).unwrap();
        assert!(!report.passed);
        assert_eq!(report.residual_anticommute, 8.0_f64.sqrt());
        assert_eq!(report.trace_ab_abs, 2.0);
    }

    #[test]
    fn verify_requires_matching_dimensions() {
        assert!(matches!(
            verify_pair(&sigma1(), &ComplexMatrix::identity(4), 1e-10),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            verify_pair(&ComplexMatrix::zeros(2, 3), &sigma1(), 1e-10),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn certify_rejects_odd_dimension_before_looking_at_residuals() {
        let one = ComplexMatrix::identity(1);
        assert!(matches!(
            InvolutionPair::certify(one.clone(), one, 1e10),
            Err(Error::OddDimension { n: 1 })
        ));
    }

    #[test]
    fn sigma1_sigma3_is_a_valid_pair() {
        // {sigma1, sigma3} = 0, so these two anticommute as well
        let p = InvolutionPair::certify(sigma1(), sigma3(), 1e-12).unwrap();
        assert_eq!(p.report().residuals(), [0.0; 5]);
    }

    #[test]
    fn canonical_pair_in_dimension_two_is_sigma3_sigma1() {
        let p = canonical_pair(2).unwrap();
        assert_eq!(p.a().frobenius_distance(&sigma3()), 0.0);
        assert_eq!(p.b().frobenius_distance(&sigma1()), 0.0);
    }

    #[test]
    fn canonical_pair_in_dimension_four_swaps_half_spaces() {
        let p = canonical_pair(4).unwrap();
        for (i, expected) in [1.0, 1.0, -1.0, -1.0].iter().enumerate() {
            assert_eq!(p.a()[(i, i)], c(*expected, 0.0));
        }
        for (i, j) in [(0, 2), (2, 0), (1, 3), (3, 1)] {
            assert_eq!(p.b()[(i, j)], c(1.0, 0.0));
        }
        assert_eq!(p.b().frobenius_norm(), 2.0);
        assert_eq!(p.report().residuals(), [0.0; 5]);
    }

    #[test]
    fn generators_reject_odd_and_zero_dimensions() {
        for n in [1usize, 3, 5, 7, 9] {
            assert!(matches!(canonical_pair(n), Err(Error::OddDimension { .. })));
            assert!(matches!(
                pauli_chain_pair(n),
                Err(Error::OddDimension { .. })
            ));
            let mut rng = RandomSource::new(0);
            assert!(matches!(
                random_pair(n, &mut rng, 1e-10),
                Err(Error::OddDimension { .. })
            ));
        }
        assert!(matches!(canonical_pair(0), Err(Error::ZeroDimension)));
    }

    #[test]
    fn pauli_chain_base_case_and_first_lift() {
        let p2 = pauli_chain_pair(2).unwrap();
        assert_eq!(p2.a().frobenius_distance(&sigma1()), 0.0);
        assert_eq!(p2.b().frobenius_distance(&-&sigma2()), 0.0);

        let p4 = pauli_chain_pair(4).unwrap();
        assert_eq!(p4.a().frobenius_distance(&sigma3().kron(&sigma1())), 0.0);
        assert_eq!(
            p4.b().frobenius_distance(&-&sigma3().kron(&sigma2())),
            0.0
        );
        assert_eq!(p4.report().residuals(), [0.0; 5]);
    }

    #[test]
    fn pauli_chain_requires_power_of_two() {
        assert!(matches!(
            pauli_chain_pair(6),
            Err(Error::NotPowerOfTwo { n: 6 })
        ));
        assert!(matches!(
            pauli_chain_pair(12),
            Err(Error::NotPowerOfTwo { n: 12 })
        ));
        assert!(pauli_chain_pair(16).is_ok());
    }

    #[test]
    fn random_pairs_certify_and_are_seed_deterministic() {
        let mut rng1 = RandomSource::new(11);
        let mut rng2 = RandomSource::new(11);
        let p1 = random_pair(6, &mut rng1, 1e-10).unwrap();
        let p2 = random_pair(6, &mut rng2, 1e-10).unwrap();
        assert_eq!(p1.a(), p2.a(), "same seed must give bitwise equal pairs");
        assert_eq!(p1.b(), p2.b());
        assert!(p1.report().passed);
    }

    #[test]
    fn random_pair_spectrum_splits_three_and_three() {
        let mut rng = RandomSource::new(1);
        let p = random_pair(6, &mut rng, 1e-10).unwrap();
        let d = hermitian_eig(p.a(), 1e-10).unwrap();
        let near_minus = d.values.iter().filter(|v| (**v + 1.0).abs() <= 1e-8).count();
        let near_plus = d.values.iter().filter(|v| (**v - 1.0).abs() <= 1e-8).count();
        assert_eq!((near_minus, near_plus), (3, 3));
    }

    #[test]
    fn derive_partner_of_sigma3_is_sigma1() {
        let b = derive_partner(&sigma3(), 1e-10).unwrap();
        assert_eq!(b.frobenius_distance(&sigma1()), 0.0);
    }

    #[test]
    fn derive_partner_of_sigma1_is_sigma3_up_to_roundoff() {
        let b = derive_partner(&sigma1(), 1e-10).unwrap();
        assert!(b.frobenius_distance(&sigma3()) <= 1e-14);
        let report = verify_pair(&sigma1(), &b, 1e-9).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn derive_partner_rejects_bad_inputs() {
        assert!(matches!(
            derive_partner(&ComplexMatrix::identity(2), 1e-10),
            Err(Error::UnbalancedSpectrum { .. })
        ));
        assert!(matches!(
            derive_partner(&sigma3().scale(c(2.0, 0.0)), 1e-10),
            Err(Error::NotInvolution { .. })
        ));
        let odd = ComplexMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                c(if i == 0 { 1.0 } else { -1.0 }, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        assert!(matches!(
            derive_partner(&odd, 1e-10),
            Err(Error::OddDimension { n: 3 })
        ));
        let skew = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(-1.0, 0.0), c(0.0, 0.0)],
        ]);
        // skew-symmetric: squares to -I, caught as a failed involution
        assert!(matches!(
            derive_partner(&skew, 1e-10),
            Err(Error::NotInvolution { .. })
        ));
    }

    #[test]
    fn derive_partner_round_trips_a_random_involution() {
        let mut rng = RandomSource::new(400);
        let p = random_pair(8, &mut rng, 1e-10).unwrap();
        let b = derive_partner(p.a(), 1e-10).unwrap();
        let report = verify_pair(p.a(), &b, 1e-9).unwrap();
        assert!(report.passed, "derived partner must certify: {report:?}");
    }

    #[test]
    fn nilpotent_of_the_textbook_pair_is_the_rank_one_ladder() {
        let n = nilpotent(&textbook_pair());
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(2.0, 0.0), c(0.0, 0.0)],
        ]);
        assert_eq!(n.frobenius_distance(&expected), 0.0);
        assert_eq!(n.matmul(&n).frobenius_norm(), 0.0);
    }

    #[test]
    fn nilpotent_commutator_defect_is_4i_ab() {
        let p = textbook_pair();
        let n = nilpotent(&p);
        let defect = &n.adjoint().matmul(&n) - &n.matmul(&n.adjoint());
        let four_i_ab = p.a().matmul(p.b()).scale(c(0.0, 4.0));
        assert!(defect.frobenius_distance(&four_i_ab) <= 1e-15);
        assert!((defect.frobenius_norm() - 4.0 * 2.0_f64.sqrt()).abs() <= 1e-14);
    }

    #[test]
    fn anticommutator_matches_hand_computations() {
        let zero = anticommutator(&sigma1(), &sigma2()).unwrap();
        assert_eq!(zero.frobenius_norm(), 0.0);
        let doubled = anticommutator(&sigma1(), &sigma1()).unwrap();
        assert_eq!(
            doubled.frobenius_distance(&ComplexMatrix::identity(2).scale(c(2.0, 0.0))),
            0.0
        );
        assert!(matches!(
            anticommutator(&sigma1(), &ComplexMatrix::identity(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kron_anticommutator_table_for_the_textbook_pair() {
        let p = textbook_pair();
        let (a, b) = (p.a(), p.b());
        let ab = a.matmul(b);
        let two_abab = ab.kron(&ab).scale(c(2.0, 0.0));

        let line1 = anticommutator(&a.kron(a), &b.kron(b)).unwrap();
        assert!(line1.frobenius_distance(&two_abab) <= 1e-15);

        let line2 = anticommutator(&a.kron(b), &a.kron(b)).unwrap();
        let two_id = ComplexMatrix::identity(4).scale(c(2.0, 0.0));
        assert!(line2.frobenius_distance(&two_id) <= 1e-15);

        let line3 = anticommutator(&a.kron(b), &b.kron(a)).unwrap();
        assert!(line3.frobenius_distance(&-&two_abab) <= 1e-15);
    }

    #[test]
    fn lift_kron_with_each_pauli_factor() {
        let p = canonical_pair(2).unwrap();
        for factor in [sigma1(), sigma2(), sigma3(), ComplexMatrix::identity(2)] {
            let lifted = lift_kron(&factor, &p, 1e-10).unwrap();
            assert_eq!(lifted.dim(), 4);
            assert!(lifted.report().passed);
        }
    }

    #[test]
    fn lift_kron_rejects_bad_factors() {
        let p = canonical_pair(2).unwrap();
        let doubled = ComplexMatrix::identity(2).scale(c(2.0, 0.0));
        assert!(matches!(
            lift_kron(&doubled, &p, 1e-10),
            Err(Error::NotInvolution { .. })
        ));
        let non_hermitian = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ]);
        assert!(matches!(
            lift_kron(&non_hermitian, &p, 1e-10),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn lift_direct_sum_doubles_the_dimension() {
        let p = textbook_pair();
        let lifted = lift_direct_sum(&p);
        assert_eq!(lifted.dim(), 4);
        assert_eq!(lifted.certified_tol(), 10.0 * p.certified_tol());
        assert!(lifted.report().passed);
        // top-left block is the original A
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(lifted.a()[(i, j)], p.a()[(i, j)]);
                assert_eq!(lifted.a()[(i + 2, j + 2)], p.a()[(i, j)]);
            }
        }
    }

    #[test]
    fn lift_star_matches_the_printed_pattern_and_rejects_big_pairs() {
        let p = textbook_pair();
        let lifted = lift_star(&p).unwrap();
        assert_eq!(lifted.dim(), 4);
        assert!(lifted.report().passed);
        // A = sigma1 star-embeds onto the anti-diagonal
        for (i, j) in [(0, 3), (1, 2), (2, 1), (3, 0)] {
            assert_eq!(lifted.a()[(i, j)], c(1.0, 0.0));
        }
        let big = lift_direct_sum(&p);
        assert!(matches!(
            lift_star(&big),
            Err(Error::BadDimension { expected: 2, .. })
        ));
    }

    #[test]
    fn three_deep_lift_composition_stays_certified() {
        let p = canonical_pair(2).unwrap();
        let once = lift_star(&p).unwrap();
        let twice = lift_direct_sum(&once);
        let thrice = lift_kron(&sigma3(), &twice, 1e-10).unwrap();
        assert_eq!(thrice.dim(), 16);
        assert!(thrice.report().passed);
    }
}
