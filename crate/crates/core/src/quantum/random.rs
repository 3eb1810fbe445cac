//! Seeded randomness: Haar-distributed unitaries, random bases and states.
//!
//! Every stochastic entry point takes either an explicit `u64` seed or a
//! caller-owned RNG stream, so runs replay exactly. ChaCha is used for its
//! stable cross-platform stream.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use super::register::HilbertRegistry;
use super::state::PureState;
use super::C_ONE;
use crate::error::{Error, Result};

/// The crate's reproducible RNG stream for a given seed.
pub fn seeded_rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn standard_normal_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    // Box-Muller; u1 bounded away from zero.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let th = 2.0 * std::f64::consts::PI * u2;
    (r * th.cos(), r * th.sin())
}

fn ginibre<R: Rng>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |_, _| {
        let (re, im) = standard_normal_pair(rng);
        Complex64::new(re, im)
    })
}

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
pub fn haar_unitary<R: Rng>(dim: usize, rng: &mut R) -> Result<DMatrix<Complex64>> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let g = ginibre(dim, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C_ONE };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    Ok(q)
}

/// Deterministic Haar unitary from a bare seed.
pub fn haar_unitary_seeded(dim: usize, seed: u64) -> Result<DMatrix<Complex64>> {
    haar_unitary(dim, &mut seeded_rng(seed))
}

/// Columns of a Haar unitary as an orthonormal basis.
pub fn random_orthobasis<R: Rng>(dim: usize, rng: &mut R) -> Result<Vec<DVector<Complex64>>> {
    let u = haar_unitary(dim, rng)?;
    Ok((0..dim).map(|j| u.column(j).into_owned()).collect())
}

/// Haar-random pure state on a registry.
pub fn random_pure_state<R: Rng>(registry: HilbertRegistry, rng: &mut R) -> Result<PureState> {
    let dim = registry.total_dim();
    let mut v = DVector::from_fn(dim, |_, _| {
        let (re, im) = standard_normal_pair(rng);
        Complex64::new(re, im)
    });
    let n = v.norm();
    v /= Complex64::new(n, 0.0);
    PureState::new(registry, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::unitary::unitarity_defect;

    #[test]
    fn same_seed_same_unitary() {
        let a = haar_unitary_seeded(4, 99).unwrap();
        let b = haar_unitary_seeded(4, 99).unwrap();
        assert_eq!(a, b);
        let c = haar_unitary_seeded(4, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = seeded_rng(3);
        for &d in &[2usize, 3, 8, 16] {
            let u = haar_unitary(d, &mut rng).unwrap();
            assert!(unitarity_defect(&u) < 1e-10);
        }
    }

    #[test]
    fn rejects_zero_dim() {
        assert!(haar_unitary_seeded(0, 1).is_err());
    }

    #[test]
    fn orthobasis_is_orthonormal() {
        let mut rng = seeded_rng(12);
        let basis = random_orthobasis(3, &mut rng).unwrap();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let ip = a.dotc(b);
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((ip.norm() - expect).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn first_entry_haar_moment() {
        // E |U_11|^2 = 1/dim; Monte Carlo against the empirical standard error.
        let dim = 2;
        let n = 10_000;
        let mut rng = seeded_rng(2024);
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..n {
            let u = haar_unitary(dim, &mut rng).unwrap();
            let x = u[(0, 0)].norm_sqr();
            sum += x;
            sumsq += x * x;
        }
        let mean = sum / n as f64;
        let var = (sumsq / n as f64 - mean * mean).max(0.0);
        let se = (var / n as f64).sqrt();
        assert!(
            (mean - 1.0 / dim as f64).abs() < 5.0 * se,
            "mean {mean} vs {} (se {se})",
            1.0 / dim as f64
        );
    }
}
