//! The entangled pure-state family a|00> + b|11> + c|22> and the negativity
//! entanglement monotone for two-qutrit states.

use crate::channels::DensityMatrix;
use crate::linalg::{hermitian_eigen, partial_transpose_b, Complex64, ComplexMatrix};
use crate::tol;
use crate::{Error, Result};

/// Normalized amplitudes of the state a|00> + b|11> + c|22>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState {
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
}

impl PureState {
    /// Requires |a|^2 + |b|^2 + |c|^2 = 1 within [`tol::STATE_NORM`].
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self> {
        let norm_sq = alpha.norm_sqr() + beta.norm_sqr() + gamma.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > tol::STATE_NORM {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn from_real(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(
            Complex64::new(alpha, 0.0),
            Complex64::new(beta, 0.0),
            Complex64::new(gamma, 0.0),
        )
    }

    /// Equal amplitudes 1/sqrt(3): the maximally entangled two-qutrit state.
    pub fn maximally_entangled() -> Self {
        let amp = 1.0 / 3.0f64.sqrt();
        Self::from_real(amp, amp, amp).expect("normalized by construction")
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }
}

/// The projector |psi><psi| as a 9x9 density matrix; the amplitudes sit at
/// composite indices 0, 4, 8 (that is, |00>, |11>, |22>).
pub fn make_state(state: &PureState) -> DensityMatrix {
    let mut psi = [Complex64::new(0.0, 0.0); 9];
    psi[0] = state.alpha();
    psi[4] = state.beta();
    psi[8] = state.gamma();
    let matrix = ComplexMatrix::from_fn(9, 9, |i, j| psi[i] * psi[j].conj());
    DensityMatrix::new(matrix).expect("pure-state projector is a valid density matrix")
}

/// Negativity: the absolute sum of the negative eigenvalues of the partial
/// transpose. Zero for separable states; 1 for the maximally entangled
/// two-qutrit state.
///
/// Eigenvalues in (-[`tol::NEGATIVITY_CLAMP`], 0) count as zero so eigensolver
/// round-off never reports phantom entanglement.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 9 {
        return Err(Error::DimensionMismatch {
            expected: "9x9 two-qutrit state".to_string(),
            found: format!("{0}x{0}", rho.dim()),
        });
    }
    let pt = partial_transpose_b(rho.matrix())?;
    let eig = hermitian_eigen(&pt)?;
    Ok(eig
        .eigenvalues
        .iter()
        .filter(|&&v| v <= -tol::NEGATIVITY_CLAMP)
        .map(|&v| -v)
        .sum())
}

/// Protected-to-initial negativity ratio; the initial negativity must be
/// positive (the ratio is undefined for separable initial states).
pub fn negativity_ratio(n_protected: f64, n_initial: f64) -> Result<f64> {
    if n_initial.is_nan() || n_initial <= 0.0 {
        return Err(Error::NonpositiveInitialNegativity { n_initial });
    }
    Ok(n_protected / n_initial)
}
