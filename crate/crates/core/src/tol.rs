//! Centralized numerical tolerances.
//!
//! Every tolerance-gated comparison in the crate goes through one of these
//! constants (or a [`Tolerances`] value carrying overrides), so the gates can
//! be tightened or relaxed in one place.

/// Structural checks: unitarity, orthonormality, purity, Schmidt reconstruction.
pub const STRUCTURAL_TOL: f64 = 1e-10;

/// Equality assertions: norms, traces, hermiticity defects.
pub const EQUALITY_TOL: f64 = 1e-12;

/// Optimizer convergence: seesaw / oracle improvement threshold.
pub const OPTIMIZER_TOL: f64 = 1e-9;

/// Tolerance bundle passed to analyzers that support overrides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub structural: f64,
    pub equality: f64,
    pub optimizer: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            structural: STRUCTURAL_TOL,
            equality: EQUALITY_TOL,
            optimizer: OPTIMIZER_TOL,
        }
    }
}
