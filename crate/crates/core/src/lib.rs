//! Two-qutrit open-system toolkit: amplitude-damping channels, weak
//! (partial-collapse) measurements and their probabilistic reversal, the
//! negativity entanglement monotone, and the composed entanglement-protection
//! schemes built from those pieces.
//!
//! The crate is layered bottom-up:
//!
//! - [`linalg`] — dense complex matrices sized for 3x3 operators and 9x9
//!   two-qutrit states, with a cyclic-Jacobi Hermitian eigensolver.
//! - [`channels`] — Kraus channels and selective (post-selected) operations
//!   applied to density matrices with probability bookkeeping.
//! - [`entanglement`] — the pure-state family a|00> + b|11> + c|22> and
//!   the negativity of two-qutrit states.
//! - [`protection`] — the two protection pipelines ("damping + reversal"
//!   and "weak measurement + damping + reversal"), their asymmetric
//!   generalizations, closed-form output states, and success probabilities.
//!
//! All values are immutable and all functions are pure, so everything here
//! can be called from any number of threads without synchronization.
//!
//! Basis convention: single-qutrit levels are |0> (ground), |1>, |2>;
//! two-qutrit product states |j,k> use the 0-based composite index 3j + k.

pub mod channels;
pub mod entanglement;
mod error;
pub mod linalg;
pub mod protection;
pub mod tol;

pub use channels::{
    amplitude_damping_kraus, apply_channel_both, apply_selective_both, reversal_operator,
    trit_flip, weak_measurement_operator, DampingParams, DensityMatrix, KrausChannel,
    ReversalParams, SelectiveOperation, SelectiveOutcome, WeakMeasurementParams,
};
pub use entanglement::{make_state, negativity, negativity_ratio, PureState};
pub use error::{Error, Result};
pub use linalg::{hermitian_eigen, partial_transpose_b, Complex64, ComplexMatrix};
pub use protection::{
    closed_form_rho_d, closed_form_rho_r, closed_form_rho_wr, optimal_reversal_scheme1,
    optimal_reversal_scheme2, run_scheme1, run_scheme1_general, run_scheme2, run_scheme2_general,
    success_probability_scheme1, success_probability_scheme2, AsymmetricConfig, SchemeResult,
};
