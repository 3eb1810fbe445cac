//! Exact dense complex linear algebra over labeled tensor factors.
//!
//! States and operators carry a [`HilbertRegistry`] naming their tensor
//! factors, so protocol code can address subsystems by role (`A_mu[1]`,
//! `Balpha_nu[3]`, ...) instead of by position. Two distinct rearrangement
//! notions exist and are easy to confuse:
//!
//! - [`PureState::permute`] physically moves subsystem *contents* between
//!   same-dimension wires (this realizes the protocol's commit-by-switching),
//! - [`PureState::reorder`] only changes the storage order of the factors
//!   (the state is physically unchanged).

mod register;
mod state;
mod unitary;

pub mod random;

pub use register::{HilbertRegistry, PairSlot, Party, SubsystemId};
pub use state::{DensityOperator, PureState, SchmidtDecomposition};
pub use unitary::{controlled_pauli, pauli_matrices, pauli_set, UnitaryOp};

use num_complex::Complex64;

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Mixed-radix strides for row-major indexing (first factor most significant).
pub(crate) fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

pub(crate) fn decompose(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for i in (0..dims.len()).rev() {
        out[i] = index % dims[i];
        index /= dims[i];
    }
}
