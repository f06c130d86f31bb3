//! Numerical tolerances used across the crate, collected in one place so no
//! magic numbers hide in the operation code.

/// Hermiticity acceptance: max-norm of A - A^dagger for inputs that must be
/// Hermitian. Sized with ~100x headroom over the round-off accumulated by
/// chains of up to six 9x9 matrix products.
pub const HERMITICITY: f64 = 1e-9;

/// Jacobi convergence: off-diagonal Frobenius norm relative to the input
/// Frobenius norm.
pub const JACOBI_REL: f64 = 1e-12;

/// Jacobi sweep cap before reporting non-convergence. A 9x9 Hermitian matrix
/// converges in well under ten sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenpair residual bound, relative to the input max-norm:
/// ||A v - lambda v|| <= EIGEN_RESIDUAL * ||A||.
pub const EIGEN_RESIDUAL: f64 = 1e-9;

/// Density-matrix trace deviation from one.
pub const DM_TRACE: f64 = 1e-9;

/// Density-matrix smallest-eigenvalue floor (positive semidefinite within
/// round-off).
pub const DM_PSD_FLOOR: f64 = -1e-9;

/// Kraus completeness: max-norm of (sum E^dagger E) - I.
pub const KRAUS_COMPLETENESS: f64 = 1e-9;

/// Valid measurement element: largest singular value at most 1 + this slack.
pub const MEASUREMENT_SLACK: f64 = 1e-9;

/// Selective outcomes at or below this probability are degenerate:
/// renormalizing would divide by numerical noise.
pub const DEGENERATE_PROB: f64 = 1e-12;

/// Pure-state normalization: | |a|^2 + |b|^2 + |c|^2 - 1 |.
pub const STATE_NORM: f64 = 1e-12;

/// Partial-transpose eigenvalues in (-NEGATIVITY_CLAMP, 0) count as zero.
/// Half an order below the eigensolver residual bound, which keeps spurious
/// negativity from round-off below 1e-9 in total.
pub const NEGATIVITY_CLAMP: f64 = 1e-10;
