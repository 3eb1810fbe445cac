//! Unitary operators on labeled supports, and the commit-transform gates.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::register::SubsystemId;
use super::state::PureState;
use super::{decompose, C_ONE, C_ZERO};
use crate::error::{Error, Result};
use crate::tol::STRUCTURAL_TOL;

/// Unitary acting on an ordered list of subsystems; identity elsewhere.
#[derive(Debug, Clone)]
pub struct UnitaryOp {
    support: Vec<SubsystemId>,
    matrix: DMatrix<Complex64>,
}

impl UnitaryOp {
    pub fn new(support: Vec<SubsystemId>, matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch("unitary must be square".into()));
        }
        let defect = unitarity_defect(&matrix);
        if defect > STRUCTURAL_TOL {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self { support, matrix })
    }

    pub fn support(&self) -> &[SubsystemId] {
        &self.support
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self {
            support: self.support.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    /// Apply to a state, acting as identity on factors outside the support.
    pub fn apply(&self, state: &PureState) -> Result<PureState> {
        let reg = state.registry();
        let dims = reg.dims();
        let positions: Vec<usize> = self
            .support
            .iter()
            .map(|id| reg.position(id))
            .collect::<Result<_>>()?;
        let support_dim: usize = positions.iter().map(|&p| dims[p]).product();
        if support_dim != self.matrix.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "support dimension {support_dim} vs matrix dimension {}",
                self.matrix.nrows()
            )));
        }
        let total = reg.total_dim();
        let env_dim = total / support_dim;

        // Gather into a (support_dim x env_dim) matrix, multiply, scatter back.
        let env_positions: Vec<usize> = (0..reg.len()).filter(|p| !positions.contains(p)).collect();
        let mut gathered = DMatrix::from_element(support_dim, env_dim, C_ZERO);
        let mut digits = vec![0usize; reg.len()];
        let mut locations = vec![(0usize, 0usize); total];
        for idx in 0..total {
            decompose(idx, &dims, &mut digits);
            let mut s = 0usize;
            for &p in &positions {
                s = s * dims[p] + digits[p];
            }
            let mut e = 0usize;
            for &p in &env_positions {
                e = e * dims[p] + digits[p];
            }
            gathered[(s, e)] = state.amplitudes()[idx];
            locations[idx] = (s, e);
        }
        let transformed = &self.matrix * gathered;
        let mut amp = DVector::from_element(total, C_ZERO);
        for (idx, &(s, e)) in locations.iter().enumerate() {
            amp[idx] = transformed[(s, e)];
        }
        PureState::new(reg.clone(), amp)
    }
}

pub(crate) fn unitarity_defect(m: &DMatrix<Complex64>) -> f64 {
    let d = m.nrows();
    let prod = m.adjoint() * m;
    let eye = DMatrix::from_diagonal_element(d, d, C_ONE);
    (prod - eye).camax()
}

/// The four commit unitaries `I, sigma_x, -i sigma_y, sigma_z` (computational basis).
pub fn pauli_matrices() -> Vec<DMatrix<Complex64>> {
    vec![
        DMatrix::from_row_slice(2, 2, &[C_ONE, C_ZERO, C_ZERO, C_ONE]),
        DMatrix::from_row_slice(2, 2, &[C_ZERO, C_ONE, C_ONE, C_ZERO]),
        DMatrix::from_row_slice(2, 2, &[C_ZERO, -C_ONE, C_ONE, C_ZERO]),
        DMatrix::from_row_slice(2, 2, &[C_ONE, C_ZERO, C_ZERO, -C_ONE]),
    ]
}

/// `pauli_matrices` wrapped as single-qubit operators on `target`.
pub fn pauli_set(target: SubsystemId) -> Vec<UnitaryOp> {
    pauli_matrices()
        .into_iter()
        .map(|m| UnitaryOp::new(vec![target], m).expect("pauli matrices are unitary"))
        .collect()
}

/// The commit transform `sum_i |e_i><e_i| (x) V_i` on `(control, target)`,
/// with a four-dimensional control and a qubit target.
pub fn controlled_pauli(control: SubsystemId, target: SubsystemId) -> UnitaryOp {
    let paulis = pauli_matrices();
    let mut m = DMatrix::from_element(8, 8, C_ZERO);
    for (i, v) in paulis.iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                m[(i * 2 + r, i * 2 + c)] = v[(r, c)];
            }
        }
    }
    UnitaryOp::new(vec![control, target], m).expect("controlled pauli is unitary")
}

/// Embed a bare matrix as an operator on the listed subsystems, checking
/// that the joint dimension matches.
pub(crate) fn operator_on(
    support: Vec<SubsystemId>,
    dims: &[usize],
    matrix: DMatrix<Complex64>,
) -> Result<UnitaryOp> {
    let joint: usize = dims.iter().product();
    if matrix.nrows() != joint {
        return Err(Error::DimensionMismatch(format!(
            "matrix dimension {} vs joint support dimension {joint}",
            matrix.nrows()
        )));
    }
    UnitaryOp::new(support, matrix)
}
