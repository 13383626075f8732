//! Deterministic randomness: a counter-based 64-bit generator with
//! splittable substreams, and Haar-distributed random unitaries built
//! from it.
//!
//! The generator is fixed for all time so that seeded runs reproduce
//! byte-for-byte: output `i` is `mix(seed + i * GAMMA)` where `GAMMA`
//! is the 64-bit golden-ratio increment and `mix` is the splitmix64
//! finalizer (xor-shift-multiply twice, then a closing xor-shift).
//! Everything is wrapping integer arithmetic, so the u64 stream is
//! identical on every platform. Floating-point variates derive from
//! that stream via fixed formulas (53-bit uniforms, Box-Muller normals).

use crate::matrix::{Complex64, ComplexMatrix};

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based pseudorandom generator. Cheap to copy conceptually:
/// the whole state is the seed plus how many outputs were drawn.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    counter: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { seed, counter: 0 }
    }

    /// Next raw 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.seed.wrapping_add(self.counter.wrapping_mul(GAMMA)))
    }

    /// Uniform double in [0, 1), using the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Pair of independent standard normals via Box-Muller. The radial
    /// uniform is shifted into (0, 1] so the logarithm is always finite.
    pub fn next_gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }

    /// Standard complex normal: (g1 + i g2) / sqrt(2), unit variance.
    pub fn next_complex_gaussian(&mut self) -> Complex64 {
        let (re, im) = self.next_gaussian_pair();
        Complex64::new(re, im).scale(std::f64::consts::FRAC_1_SQRT_2)
    }

    /// Derive an independent substream. The child starts from a fresh
    /// seed drawn from this stream, so parent and child can be consumed
    /// in any order (or on different threads) without interfering.
    pub fn split(&mut self) -> RandomSource {
        RandomSource::new(self.next_u64())
    }
}

/// Haar-distributed random unitary: fill a matrix with standard complex
/// normals, take its QR factorization, and absorb the phases of R's
/// diagonal into Q so the distribution is exactly uniform.
pub fn haar_unitary(n: usize, rng: &mut RandomSource) -> ComplexMatrix {
    assert!(n >= 1, "haar_unitary requires a positive dimension");
    let g = ComplexMatrix::from_fn(n, n, |_, _| rng.next_complex_gaussian());
    let (q, r) = householder_qr(&g);
    // Q * diag(r_jj / |r_jj|) makes the implied R-diagonal real positive
    let mut u = q;
    for j in 0..n {
        let rjj = r[(j, j)];
        let mag = rjj.norm();
        let phase = if mag == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            rjj / mag
        };
        for i in 0..n {
            u[(i, j)] *= phase;
        }
    }
    u
}

/// QR by Householder reflections; returns (Q, R) with Q unitary to
/// machine precision.
fn householder_qr(m: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let n = m.rows();
    assert!(m.is_square(), "householder_qr expects a square matrix");
    let mut r = m.clone();
    let mut q = ComplexMatrix::identity(n);
    for k in 0..n.saturating_sub(1) {
        // reflector annihilating column k below the diagonal
        let norm_x: f64 = (k..n).map(|i| r[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm_x;
        let mut v: Vec<Complex64> = (k..n).map(|i| r[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm_sqr: f64 = v.iter().map(|e| e.norm_sqr()).sum();
        if vnorm_sqr == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm_sqr;
        // R <- H R restricted to columns k..n
        for j in k..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(i, vi)| vi.conj() * r[(k + i, j)])
                .sum();
            let s = dot.scale(beta);
            for (i, vi) in v.iter().enumerate() {
                let sub = s * vi;
                r[(k + i, j)] -= sub;
            }
        }
        // Q <- Q H (reflectors are Hermitian involutions, so this
        // accumulates Q = H_0 H_1 ... with Q R = original matrix)
        for i in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(jj, vj)| q[(i, k + jj)] * vj)
                .sum();
            let s = dot.scale(beta);
            for (jj, vj) in v.iter().enumerate() {
                let sub = s * vj.conj();
                q[(i, k + jj)] -= sub;
            }
        }
    }
    (q, r)
}
