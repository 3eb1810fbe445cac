//! Pure states and density operators over labeled registries.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::register::{HilbertRegistry, SubsystemId};
use super::{decompose, strides, C_ZERO};
use crate::error::{Error, Result};
use crate::tol::EQUALITY_TOL;

/// Normalized amplitude vector over a registry.
#[derive(Debug, Clone)]
pub struct PureState {
    registry: HilbertRegistry,
    amplitudes: DVector<Complex64>,
}

/// Result of a Schmidt decomposition across a bipartition of the registry.
///
/// Coefficients are nonnegative and descending; `state = sum_m c_m |left_m> |right_m>`
/// with the left vectors living on the cut factors (in registry order) and the
/// right vectors on the complement.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub coefficients: Vec<f64>,
    pub left: Vec<DVector<Complex64>>,
    pub right: Vec<DVector<Complex64>>,
}

impl PureState {
    pub fn new(registry: HilbertRegistry, amplitudes: DVector<Complex64>) -> Result<Self> {
        if amplitudes.len() != registry.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "amplitude length {} vs registry dimension {}",
                amplitudes.len(),
                registry.total_dim()
            )));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > EQUALITY_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { registry, amplitudes })
    }

    /// Computational basis state `|index>`.
    pub fn basis_state(registry: HilbertRegistry, index: usize) -> Result<Self> {
        let dim = registry.total_dim();
        if index >= dim {
            return Err(Error::DimensionMismatch(format!(
                "basis index {index} out of range {dim}"
            )));
        }
        let mut amp = DVector::from_element(dim, C_ZERO);
        amp[index] = Complex64::new(1.0, 0.0);
        Self::new(registry, amp)
    }

    pub fn registry(&self) -> &HilbertRegistry {
        &self.registry
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// Inner product `<self|other>`.
    pub fn overlap(&self, other: &Self) -> Result<Complex64> {
        if self.registry != other.registry {
            return Err(Error::DimensionMismatch(
                "overlap requires identical registries".into(),
            ));
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// Kronecker product on concatenated registries.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let registry = self.registry.concat(&other.registry)?;
        let amplitudes = self.amplitudes.kronecker(&other.amplitudes);
        Self::new(registry, amplitudes)
    }

    /// Physically move subsystem contents: the factor labeled `new_order[k]`
    /// ends up on the wire at registry position `k`. Dimensions at each
    /// position must match; the registry of the result is unchanged.
    pub fn permute(&self, new_order: &[SubsystemId]) -> Result<Self> {
        let map = content_move_map(&self.registry, new_order)?;
        let mut amp = DVector::from_element(self.dim(), C_ZERO);
        for (new_idx, &old_idx) in map.iter().enumerate() {
            amp[new_idx] = self.amplitudes[old_idx];
        }
        Self::new(self.registry.clone(), amp)
    }

    /// Change the storage order of the factors; physically a no-op.
    pub fn reorder(&self, new_order: &[SubsystemId]) -> Result<Self> {
        let (registry, map) = reorder_map(&self.registry, new_order)?;
        let mut amp = DVector::from_element(self.dim(), C_ZERO);
        for (new_idx, &old_idx) in map.iter().enumerate() {
            amp[new_idx] = self.amplitudes[old_idx];
        }
        Self::new(registry, amp)
    }

    /// Reshape into a `cut x rest` matrix (row index over the cut factors in
    /// registry order, column index over the rest).
    pub(crate) fn bipartition_matrix(&self, cut: &[SubsystemId]) -> Result<DMatrix<Complex64>> {
        let reg = &self.registry;
        let cut_positions: Vec<usize> = cut
            .iter()
            .map(|id| reg.position(id))
            .collect::<Result<_>>()?;
        let rest_positions: Vec<usize> = (0..reg.len())
            .filter(|p| !cut_positions.contains(p))
            .collect();
        let dims = reg.dims();
        let cut_dim: usize = cut_positions.iter().map(|&p| dims[p]).product();
        let rest_dim: usize = rest_positions.iter().map(|&p| dims[p]).product();
        let mut m = DMatrix::from_element(cut_dim, rest_dim, C_ZERO);
        let mut digits = vec![0usize; reg.len()];
        for idx in 0..self.dim() {
            decompose(idx, &dims, &mut digits);
            let mut r = 0usize;
            for &p in &cut_positions {
                r = r * dims[p] + digits[p];
            }
            let mut c = 0usize;
            for &p in &rest_positions {
                c = c * dims[p] + digits[p];
            }
            m[(r, c)] = self.amplitudes[idx];
        }
        Ok(m)
    }

    /// Reduced density operator on the `keep`ed factors (registry order).
    pub fn partial_trace(&self, keep: &[SubsystemId]) -> Result<DensityOperator> {
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        let kept = self.registry.restricted_to(keep)?;
        let m = self.bipartition_matrix(&kept.ids())?;
        let rho = &m * m.adjoint();
        DensityOperator::new(kept, rho)
    }

    /// Schmidt decomposition across `cut | complement`.
    pub fn schmidt(&self, cut: &[SubsystemId]) -> Result<SchmidtDecomposition> {
        if cut.is_empty() || cut.len() >= self.registry.len() {
            return Err(Error::TrivialCut);
        }
        let cut_reg = self.registry.restricted_to(cut)?;
        if cut_reg.len() != cut.len() {
            return Err(Error::UnknownSubsystem("duplicate id in cut".into()));
        }
        let m = self.bipartition_matrix(&cut_reg.ids())?;
        let svd = m.svd(true, true);
        let u = svd.u.expect("svd with vectors");
        let vt = svd.v_t.expect("svd with vectors");
        let mut coefficients = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &s) in svd.singular_values.iter().enumerate() {
            if s > 1e-14 {
                coefficients.push(s);
                left.push(u.column(i).into_owned());
                right.push(vt.row(i).transpose().map(|z| z.conj()));
            }
        }
        Ok(SchmidtDecomposition { coefficients, left, right })
    }

    pub fn to_density(&self) -> DensityOperator {
        let rho = &self.amplitudes * self.amplitudes.adjoint();
        DensityOperator {
            registry: self.registry.clone(),
            matrix: rho,
        }
    }
}

/// Hermitian, positive semidefinite, trace-one operator over a registry.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    registry: HilbertRegistry,
    matrix: DMatrix<Complex64>,
}

impl DensityOperator {
    pub fn new(registry: HilbertRegistry, matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = registry.total_dim();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} vs registry dimension {dim}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let herm_defect = (&matrix - matrix.adjoint()).camax();
        if herm_defect > EQUALITY_TOL {
            return Err(Error::NotHermitian(herm_defect));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > EQUALITY_TOL || trace.im.abs() > EQUALITY_TOL {
            return Err(Error::TraceNotOne(trace.re));
        }
        Ok(Self { registry, matrix })
    }

    /// `I/d` on the given registry.
    pub fn maximally_mixed(registry: HilbertRegistry) -> Self {
        let d = registry.total_dim();
        let matrix = DMatrix::from_diagonal_element(d, d, Complex64::new(1.0 / d as f64, 0.0));
        Self { registry, matrix }
    }

    pub fn registry(&self) -> &HilbertRegistry {
        &self.registry
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let registry = self.registry.concat(&other.registry)?;
        let matrix = self.matrix.kronecker(&other.matrix);
        Self::new(registry, matrix)
    }

    /// Physically move subsystem contents; see [`PureState::permute`].
    pub fn permute(&self, new_order: &[SubsystemId]) -> Result<Self> {
        let map = content_move_map(&self.registry, new_order)?;
        let d = self.dim();
        let mut m = DMatrix::from_element(d, d, C_ZERO);
        for (ri, &ro) in map.iter().enumerate() {
            for (ci, &co) in map.iter().enumerate() {
                m[(ri, ci)] = self.matrix[(ro, co)];
            }
        }
        Self::new(self.registry.clone(), m)
    }

    /// Change factor storage order; physically a no-op.
    pub fn reorder(&self, new_order: &[SubsystemId]) -> Result<Self> {
        let (registry, map) = reorder_map(&self.registry, new_order)?;
        let d = self.dim();
        let mut m = DMatrix::from_element(d, d, C_ZERO);
        for (ri, &ro) in map.iter().enumerate() {
            for (ci, &co) in map.iter().enumerate() {
                m[(ri, ci)] = self.matrix[(ro, co)];
            }
        }
        Self::new(registry, m)
    }

    /// Reduced operator on the `keep`ed factors (registry order preserved).
    pub fn partial_trace(&self, keep: &[SubsystemId]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        let kept = self.registry.restricted_to(keep)?;
        let dims = self.registry.dims();
        let keep_positions: Vec<usize> = kept
            .ids()
            .iter()
            .map(|id| self.registry.position(id))
            .collect::<Result<_>>()?;
        let env_positions: Vec<usize> = (0..self.registry.len())
            .filter(|p| !keep_positions.contains(p))
            .collect();
        let keep_dim: usize = keep_positions.iter().map(|&p| dims[p]).product();
        let env_dim: usize = env_positions.iter().map(|&p| dims[p]).product();

        // index(keep_digits, env_digits) -> full index
        let full_strides = strides(&dims);
        let compose = |kidx: usize, eidx: usize| -> usize {
            let mut idx = 0usize;
            let mut k = kidx;
            for &p in keep_positions.iter().rev() {
                idx += (k % dims[p]) * full_strides[p];
                k /= dims[p];
            }
            let mut e = eidx;
            for &p in env_positions.iter().rev() {
                idx += (e % dims[p]) * full_strides[p];
                e /= dims[p];
            }
            idx
        };

        let mut out = DMatrix::from_element(keep_dim, keep_dim, C_ZERO);
        for r in 0..keep_dim {
            for c in 0..keep_dim {
                let mut acc = C_ZERO;
                for e in 0..env_dim {
                    acc += self.matrix[(compose(r, e), compose(c, e))];
                }
                out[(r, c)] = acc;
            }
        }
        Self::new(kept, out)
    }

    /// Trace distance `(1/2) * sum of singular values of (self - other)`.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        if self.registry != other.registry {
            return Err(Error::DimensionMismatch(
                "trace distance requires identical registries".into(),
            ));
        }
        let diff = &self.matrix - &other.matrix;
        let sv = diff.singular_values();
        Ok(0.5 * sv.iter().sum::<f64>())
    }

    /// Eigenvalues of the (hermitian) matrix, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let eig = nalgebra::SymmetricEigen::new(self.matrix.clone());
        let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Full invariant check including positive semidefiniteness.
    pub fn validate(&self, psd_tol: f64) -> Result<()> {
        if let Some(min) = self.eigenvalues().first() {
            if *min < -psd_tol {
                return Err(Error::Config(format!("negative eigenvalue {min}")));
            }
        }
        Ok(())
    }
}

/// Index map realizing a physical content move (shared by state/operator).
///
/// `map[new_index] = old_index` where the digit at position `k` of the new
/// index addresses the factor that was labeled `new_order[k]`.
fn content_move_map(registry: &HilbertRegistry, new_order: &[SubsystemId]) -> Result<Vec<usize>> {
    let n = registry.len();
    if new_order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let dims = registry.dims();
    let mut source = vec![usize::MAX; n];
    for (k, id) in new_order.iter().enumerate() {
        let p = registry.position(id)?;
        if source.contains(&p) {
            return Err(Error::NotAPermutation);
        }
        if dims[p] != dims[k] {
            return Err(Error::DimensionMismatch(format!(
                "cannot move {id} (dim {}) onto wire of dim {}",
                dims[p], dims[k]
            )));
        }
        source[k] = p;
    }
    let full_strides = strides(&dims);
    let total = registry.total_dim();
    let mut map = vec![0usize; total];
    let mut digits = vec![0usize; n];
    for (new_idx, entry) in map.iter_mut().enumerate() {
        decompose(new_idx, &dims, &mut digits);
        let mut old_idx = 0usize;
        for k in 0..n {
            old_idx += digits[k] * full_strides[source[k]];
        }
        *entry = old_idx;
    }
    Ok(map)
}

/// Index map and registry for a storage reorder.
fn reorder_map(
    registry: &HilbertRegistry,
    new_order: &[SubsystemId],
) -> Result<(HilbertRegistry, Vec<usize>)> {
    let n = registry.len();
    if new_order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let dims = registry.dims();
    let mut source = vec![usize::MAX; n];
    let mut factors = Vec::with_capacity(n);
    for (k, id) in new_order.iter().enumerate() {
        let p = registry.position(id)?;
        if source.contains(&p) {
            return Err(Error::NotAPermutation);
        }
        source[k] = p;
        factors.push((*id, dims[p]));
    }
    let new_registry = HilbertRegistry::new(factors)?;
    let new_dims = new_registry.dims();
    let full_strides = strides(&dims);
    let total = registry.total_dim();
    let mut map = vec![0usize; total];
    let mut digits = vec![0usize; n];
    for (new_idx, entry) in map.iter_mut().enumerate() {
        decompose(new_idx, &new_dims, &mut digits);
        let mut old_idx = 0usize;
        for k in 0..n {
            old_idx += digits[k] * full_strides[source[k]];
        }
        *entry = old_idx;
    }
    Ok((new_registry, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::register::{PairSlot, Party};
    use approx::assert_abs_diff_eq;

    fn qubit(id: u32) -> SubsystemId {
        SubsystemId::new(Party::BAlpha, PairSlot::None, id)
    }

    fn two_qubits() -> HilbertRegistry {
        HilbertRegistry::new(vec![(qubit(1), 2), (qubit(2), 2)]).unwrap()
    }

    fn state(reg: HilbertRegistry, amps: &[Complex64]) -> PureState {
        PureState::new(reg, DVector::from_row_slice(amps)).unwrap()
    }

    const ONE: Complex64 = Complex64::new(1.0, 0.0);
    const ZERO: Complex64 = Complex64::new(0.0, 0.0);

    #[test]
    fn tensor_of_basis_states() {
        let r1 = HilbertRegistry::new(vec![(qubit(1), 2)]).unwrap();
        let r2 = HilbertRegistry::new(vec![(qubit(2), 2)]).unwrap();
        let s1 = PureState::basis_state(r1, 0).unwrap();
        let s2 = PureState::basis_state(r2, 1).unwrap();
        let t = s1.tensor(&s2).unwrap();
        assert_eq!(t.amplitudes()[1], ONE);
        assert_eq!(t.amplitudes().iter().filter(|z| z.norm() > 0.0).count(), 1);
    }

    #[test]
    fn tensor_rejects_duplicates() {
        let r = HilbertRegistry::new(vec![(qubit(1), 2)]).unwrap();
        let s = PureState::basis_state(r, 0).unwrap();
        assert!(s.tensor(&s).is_err());
    }

    #[test]
    fn permute_swaps_contents() {
        // |1>|2> -> |2>|1>   (k=1,2 label the computational basis states)
        let s = state(two_qubits(), &[ZERO, ONE, ZERO, ZERO]); // |0>|1>
        let swapped = s.permute(&[qubit(2), qubit(1)]).unwrap();
        assert_eq!(swapped.amplitudes()[2], ONE); // |1>|0>
    }

    #[test]
    fn permute_is_involutive_for_swap() {
        let inv = 0.5f64.sqrt();
        let s = state(
            two_qubits(),
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, inv * inv),
                Complex64::new(inv * inv, 0.0),
                Complex64::new(0.0, -0.5),
            ],
        );
        let order = [qubit(2), qubit(1)];
        let twice = s.permute(&order).unwrap().permute(&order).unwrap();
        assert_abs_diff_eq!((twice.amplitudes() - s.amplitudes()).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn permute_fixes_symmetric_state() {
        let inv = Complex64::new(0.5f64.sqrt(), 0.0);
        let s = state(two_qubits(), &[ZERO, inv, inv, ZERO]);
        let swapped = s.permute(&[qubit(2), qubit(1)]).unwrap();
        assert_abs_diff_eq!((swapped.amplitudes() - s.amplitudes()).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn permute_rejects_non_permutation() {
        let s = state(two_qubits(), &[ONE, ZERO, ZERO, ZERO]);
        assert!(s.permute(&[qubit(1), qubit(1)]).is_err());
        assert!(s.permute(&[qubit(1)]).is_err());
    }

    #[test]
    fn bell_state_partial_trace_is_maximally_mixed() {
        let inv = Complex64::new(0.5f64.sqrt(), 0.0);
        let bell = state(two_qubits(), &[inv, ZERO, ZERO, inv]);
        let rho = bell.partial_trace(&[qubit(1)]).unwrap();
        let mixed = DensityOperator::maximally_mixed(rho.registry().clone());
        assert!(rho.trace_distance(&mixed).unwrap() < 1e-12);
    }

    #[test]
    fn partial_trace_keep_everything_is_identity_map() {
        let inv = Complex64::new(0.5f64.sqrt(), 0.0);
        let bell = state(two_qubits(), &[inv, ZERO, ZERO, inv]);
        let rho = bell.partial_trace(&[qubit(1), qubit(2)]).unwrap();
        let full = bell.to_density();
        assert!(rho.trace_distance(&full).unwrap() < 1e-12);
    }

    #[test]
    fn partial_trace_rejects_empty_keep() {
        let s = state(two_qubits(), &[ONE, ZERO, ZERO, ZERO]);
        assert!(s.partial_trace(&[]).is_err());
    }

    #[test]
    fn trace_distance_basics() {
        let r = two_qubits();
        let a = state(r.clone(), &[ONE, ZERO, ZERO, ZERO]).to_density();
        let b = state(r, &[ZERO, ONE, ZERO, ZERO]).to_density();
        assert_abs_diff_eq!(a.trace_distance(&a).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(a.trace_distance(&b).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn trace_distance_mixed_vs_pure_qubit() {
        // TD(I/2, |1><1|) = 1/2: eigenvalues of the difference are +-1/2.
        let r = HilbertRegistry::new(vec![(qubit(1), 2)]).unwrap();
        let pure = PureState::basis_state(r.clone(), 0).unwrap().to_density();
        let mixed = DensityOperator::maximally_mixed(r);
        assert_abs_diff_eq!(mixed.trace_distance(&pure).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn overlap_basics() {
        let r = two_qubits();
        let a = state(r.clone(), &[ONE, ZERO, ZERO, ZERO]);
        let b = state(r.clone(), &[ZERO, ONE, ZERO, ZERO]);
        let inv = Complex64::new(0.5f64.sqrt(), 0.0);
        let c = state(r, &[inv, inv, ZERO, ZERO]);
        assert_abs_diff_eq!(a.overlap(&a).unwrap().re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(a.overlap(&b).unwrap().norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(a.overlap(&c).unwrap().norm(), 0.5f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn schmidt_of_product_state_is_rank_one() {
        let s = state(two_qubits(), &[ZERO, ONE, ZERO, ZERO]);
        let d = s.schmidt(&[qubit(1)]).unwrap();
        assert_eq!(d.coefficients.len(), 1);
        assert_abs_diff_eq!(d.coefficients[0], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn schmidt_rejects_trivial_cut() {
        let s = state(two_qubits(), &[ONE, ZERO, ZERO, ZERO]);
        assert!(s.schmidt(&[]).is_err());
        assert!(s.schmidt(&[qubit(1), qubit(2)]).is_err());
    }

    #[test]
    fn reorder_then_reorder_back() {
        let s = state(
            two_qubits(),
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.5),
            ],
        );
        let r = s.reorder(&[qubit(2), qubit(1)]).unwrap();
        assert_eq!(r.registry().ids(), vec![qubit(2), qubit(1)]);
        let back = r.reorder(&[qubit(1), qubit(2)]).unwrap();
        assert_abs_diff_eq!((back.amplitudes() - s.amplitudes()).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn density_constructor_rejects_non_hermitian() {
        let r = HilbertRegistry::new(vec![(qubit(1), 2)]).unwrap();
        let m = DMatrix::from_row_slice(2, 2, &[ONE, ONE, ZERO, ZERO]);
        assert!(DensityOperator::new(r, m).is_err());
    }
}
