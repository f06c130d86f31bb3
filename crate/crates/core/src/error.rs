use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the library.
///
/// Most variants are rejected-input errors; [`Error::is_numerical`] picks out
/// the ones that signal a failure of the numerics on otherwise valid input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("entry count {len} does not match a {rows}x{cols} matrix")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |A - A^dagger| = {deviation:.3e}")]
    NotHermitian { deviation: f64 },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})"
    )]
    EigenNoConvergence { sweeps: usize, off_norm: f64 },

    #[error("parameter {name} = {value} must lie in {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("amplitudes are not normalized: |a|^2 + |b|^2 + |c|^2 = {norm_sq}")]
    NotNormalized { norm_sq: f64 },

    #[error("not a valid density matrix: {reason}")]
    InvalidDensityMatrix { reason: String },

    #[error("Kraus completeness violated: max |sum E^dagger E - I| = {deviation:.3e}")]
    IncompleteKraus { deviation: f64 },

    #[error("not a valid measurement element: largest singular value = {sigma_max}")]
    InvalidMeasurement { sigma_max: f64 },

    #[error("outcome probability {probability:.3e} is degenerate; the post-measurement state is undefined")]
    DegenerateOutcome { probability: f64 },

    #[error("negativity ratio undefined: initial negativity {n_initial} must be positive")]
    NonpositiveInitialNegativity { n_initial: f64 },
}

impl Error {
    /// True when the error reports a failure of the numerics rather than a
    /// rejected input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::EigenNoConvergence { .. } | Error::DegenerateOutcome { .. }
        )
    }
}
