//! The two entanglement-protection pipelines and their closed forms.
//!
//! Scheme one: damping followed by a reversing measurement on each qutrit.
//! Scheme two: a prior weak measurement on each qutrit, then damping, then
//! the reversing measurement. The optimal reversal strengths are pr = g for
//! scheme one and pr = p + g(1-p) for scheme two, per excited level and per
//! qutrit.
//!
//! Both pipelines apply the reversal in its maximized form (largest singular
//! value scaled to one, see
//! [`maximized`](crate::channels::SelectiveOperation::maximized)): the
//! renormalized output state is identical, and the branch probability is the
//! best achievable for the filter, which is what the closed-form success
//! probabilities here describe.
//!
//! The `closed_form_*` constructors build the same output states directly
//! from the amplitudes; they are an algebraic route wholly separate from the
//! Kraus pipeline, and the two must agree entrywise to 1e-12.

use crate::channels::{
    amplitude_damping_kraus, apply_channel_both, apply_selective_both, reversal_operator,
    weak_measurement_operator, DampingParams, DensityMatrix, ReversalParams, WeakMeasurementParams,
};
use crate::entanglement::{make_state, negativity, PureState};
use crate::linalg::{Complex64, ComplexMatrix};
use crate::tol;
use crate::{Error, Result};

/// Per-qutrit damping and weak-measurement parameters for the fully
/// asymmetric pipelines. The weak-measurement fields are ignored by
/// [`run_scheme1_general`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymmetricConfig {
    pub damp_a: DampingParams,
    pub damp_b: DampingParams,
    pub wm_a: WeakMeasurementParams,
    pub wm_b: WeakMeasurementParams,
}

/// Everything measured at one parameter point of a protection scheme.
#[derive(Debug, Clone)]
pub struct SchemeResult {
    /// Negativity of the initial pure state.
    pub n_initial: f64,
    /// Negativity after the damping stage of the executed pipeline.
    pub n_damped: f64,
    /// Negativity of the final (protected) state.
    pub n_protected: f64,
    /// Product of the probabilities of every post-selected stage.
    pub success_probability: f64,
    /// State after the damping stage.
    pub state_damped: DensityMatrix,
    /// Final state after the reversing measurement.
    pub state_protected: DensityMatrix,
}

/// Optimal reversal for scheme one: pr = g1, qr = g2.
///
/// Rejected when either decay probability is 1 (reversal strength 1 is the
/// projective limit and is disallowed).
pub fn optimal_reversal_scheme1(damp: DampingParams) -> Result<ReversalParams> {
    ReversalParams::new(damp.g1(), damp.g2())
}

/// Optimal reversal for scheme two: pr = p + g1(1-p), qr = q + g2(1-q).
///
/// The result reaches 1 only if a decay probability is 1 (the weak
/// measurement strengths are below 1 by construction); that case is rejected.
pub fn optimal_reversal_scheme2(
    damp: DampingParams,
    wm: WeakMeasurementParams,
) -> Result<ReversalParams> {
    ReversalParams::new(
        wm.p() + damp.g1() * (1.0 - wm.p()),
        wm.q() + damp.g2() * (1.0 - wm.q()),
    )
}

/// Shared pipeline: optional per-qutrit weak measurement, per-qutrit damping,
/// per-qutrit maximized reversal.
fn run_pipeline(
    state: &PureState,
    wm: Option<(WeakMeasurementParams, WeakMeasurementParams)>,
    damp: (DampingParams, DampingParams),
    rev: (ReversalParams, ReversalParams),
) -> Result<SchemeResult> {
    let rho0 = make_state(state);
    let n_initial = negativity(&rho0)?;

    let mut success = 1.0;
    let pre_damp = match wm {
        None => rho0,
        Some((wm_a, wm_b)) => {
            let m_a = weak_measurement_operator(wm_a);
            let m_b = weak_measurement_operator(wm_b);
            let out = apply_selective_both(&rho0, &m_a, &m_b)?;
            success *= out.probability;
            out.state
        }
    };

    let channel_a = amplitude_damping_kraus(damp.0);
    let channel_b = amplitude_damping_kraus(damp.1);
    let state_damped = apply_channel_both(&pre_damp, &channel_a, &channel_b)?;
    let n_damped = negativity(&state_damped)?;

    let rev_a = reversal_operator(rev.0).maximized()?;
    let rev_b = reversal_operator(rev.1).maximized()?;
    let out = apply_selective_both(&state_damped, &rev_a, &rev_b)?;
    success *= out.probability;
    let n_protected = negativity(&out.state)?;

    Ok(SchemeResult {
        n_initial,
        n_damped,
        n_protected,
        success_probability: success.clamp(0.0, 1.0),
        state_damped,
        state_protected: out.state,
    })
}

/// Scheme one with identical parameters on both qutrits: damping, then the
/// given reversal.
pub fn run_scheme1(
    state: &PureState,
    damp: DampingParams,
    rev: ReversalParams,
) -> Result<SchemeResult> {
    run_pipeline(state, None, (damp, damp), (rev, rev))
}

/// Scheme two with identical parameters on both qutrits: weak measurement,
/// damping, then the given reversal. The success probability is the product
/// of both post-selected stages.
pub fn run_scheme2(
    state: &PureState,
    wm: WeakMeasurementParams,
    damp: DampingParams,
    rev: ReversalParams,
) -> Result<SchemeResult> {
    run_pipeline(state, Some((wm, wm)), (damp, damp), (rev, rev))
}

/// Scheme one with independent per-qutrit damping and the per-qutrit optimal
/// reversal (pr = g1, qr = g2 of each qutrit's damping). The config's
/// weak-measurement fields are ignored.
pub fn run_scheme1_general(state: &PureState, cfg: &AsymmetricConfig) -> Result<SchemeResult> {
    let rev_a = optimal_reversal_scheme1(cfg.damp_a)?;
    let rev_b = optimal_reversal_scheme1(cfg.damp_b)?;
    run_pipeline(state, None, (cfg.damp_a, cfg.damp_b), (rev_a, rev_b))
}

/// Scheme two with independent per-qutrit weak measurements and damping, and
/// the per-qutrit optimal reversal pr = p + g1(1-p), qr = q + g2(1-q).
pub fn run_scheme2_general(state: &PureState, cfg: &AsymmetricConfig) -> Result<SchemeResult> {
    let rev_a = optimal_reversal_scheme2(cfg.damp_a, cfg.wm_a)?;
    let rev_b = optimal_reversal_scheme2(cfg.damp_b, cfg.wm_b)?;
    run_pipeline(
        state,
        Some((cfg.wm_a, cfg.wm_b)),
        (cfg.damp_a, cfg.damp_b),
        (rev_a, rev_b),
    )
}

fn check_unit_interval(name: &'static str, value: f64, include_one: bool) -> Result<()> {
    let ok = value.is_finite() && value >= 0.0 && (value < 1.0 || (include_one && value == 1.0));
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange {
            name,
            value,
            range: if include_one { "[0, 1]" } else { "[0, 1)" },
        })
    }
}

/// Scheme-one success probability at the optimal reversal pr = damping:
/// (1-D)^2 [1 + (|b|^2 + |c|^2)(2D + D^2)].
pub fn success_probability_scheme1(state: &PureState, damping: f64) -> Result<f64> {
    check_unit_interval("damping", damping, false)?;
    let s = state.beta().norm_sqr() + state.gamma().norm_sqr();
    let dbar = 1.0 - damping;
    Ok(dbar * dbar * (1.0 + s * (2.0 * damping + damping * damping)))
}

/// Scheme-two success probability at the optimal reversal pr = p + D(1-p):
/// (1-D)^2 (1-p)^2 [1 + (|b|^2 + |c|^2)(2D(1-p) + D^2 (1-p)^2)].
pub fn success_probability_scheme2(state: &PureState, damping: f64, p: f64) -> Result<f64> {
    check_unit_interval("damping", damping, false)?;
    check_unit_interval("p", p, false)?;
    let s = state.beta().norm_sqr() + state.gamma().norm_sqr();
    let dbar = 1.0 - damping;
    let pbar = 1.0 - p;
    Ok(dbar
        * dbar
        * pbar
        * pbar
        * (1.0 + s * (2.0 * damping * pbar + damping * damping * pbar * pbar)))
}

/// Hermitian 9x9 from real diagonal entries plus upper-triangle values (the
/// conjugates are filled in).
fn hermitian_from_parts(diag: [f64; 9], upper: [(usize, usize, Complex64); 3]) -> ComplexMatrix {
    ComplexMatrix::from_fn(9, 9, |i, j| {
        if i == j {
            return Complex64::new(diag[i], 0.0);
        }
        for &(r, c, v) in &upper {
            if (i, j) == (r, c) {
                return v;
            }
            if (i, j) == (c, r) {
                return v.conj();
            }
        }
        Complex64::new(0.0, 0.0)
    })
}

/// State after symmetric damping of a|00> + b|11> + c|22>, built directly
/// from the amplitudes.
///
/// Nonzero entries (0-based composite indices, s = |b|^2 + |c|^2):
/// `[0,0] = |a|^2 + D^2 s`; `[1,1] = [3,3] = D(1-D)|b|^2`;
/// `[2,2] = [6,6] = D(1-D)|c|^2`; `[4,4] = (1-D)^2 |b|^2`;
/// `[8,8] = (1-D)^2 |c|^2`; `[0,4] = (1-D) a b*`; `[0,8] = (1-D) a c*`;
/// `[4,8] = (1-D)^2 b c*`.
pub fn closed_form_rho_d(state: &PureState, damping: f64) -> Result<DensityMatrix> {
    check_unit_interval("damping", damping, true)?;
    let (a, b, c) = (state.alpha(), state.beta(), state.gamma());
    let s = b.norm_sqr() + c.norm_sqr();
    let d = damping;
    let dbar = 1.0 - d;

    let mut diag = [0.0; 9];
    diag[0] = a.norm_sqr() + d * d * s;
    diag[1] = d * dbar * b.norm_sqr();
    diag[3] = diag[1];
    diag[2] = d * dbar * c.norm_sqr();
    diag[6] = diag[2];
    diag[4] = dbar * dbar * b.norm_sqr();
    diag[8] = dbar * dbar * c.norm_sqr();

    let upper = [
        (0, 4, a * b.conj() * dbar),
        (0, 8, a * c.conj() * dbar),
        (4, 8, b * c.conj() * dbar * dbar),
    ];
    DensityMatrix::new(hermitian_from_parts(diag, upper))
}

/// Scheme-one output state built directly from the amplitudes, normalized by
/// C1 = (1-pr)^2 |a|^2 + [(1-D)^2 + 2D(1-D)(1-pr) + D^2 (1-pr)^2] s.
pub fn closed_form_rho_r(state: &PureState, damping: f64, pr: f64) -> Result<DensityMatrix> {
    check_unit_interval("damping", damping, false)?;
    check_unit_interval("pr", pr, false)?;
    let (a, b, c) = (state.alpha(), state.beta(), state.gamma());
    let s = b.norm_sqr() + c.norm_sqr();
    let d = damping;
    let dbar = 1.0 - d;
    let prbar = 1.0 - pr;

    let c1 = prbar * prbar * a.norm_sqr()
        + (dbar * dbar + 2.0 * d * dbar * prbar + d * d * prbar * prbar) * s;
    if c1 <= tol::DEGENERATE_PROB {
        return Err(Error::DegenerateOutcome { probability: c1 });
    }

    let mut diag = [0.0; 9];
    diag[0] = prbar * prbar * (a.norm_sqr() + d * d * s) / c1;
    diag[1] = d * dbar * prbar * b.norm_sqr() / c1;
    diag[3] = diag[1];
    diag[2] = d * dbar * prbar * c.norm_sqr() / c1;
    diag[6] = diag[2];
    diag[4] = dbar * dbar * b.norm_sqr() / c1;
    diag[8] = dbar * dbar * c.norm_sqr() / c1;

    let scale = |x: f64| Complex64::new(x / c1, 0.0);
    let upper = [
        (0, 4, a * b.conj() * scale(dbar * prbar)),
        (0, 8, a * c.conj() * scale(dbar * prbar)),
        (4, 8, b * c.conj() * scale(dbar * dbar)),
    ];
    DensityMatrix::new(hermitian_from_parts(diag, upper))
}

/// Scheme-two output state built directly from the amplitudes, normalized by
/// C2 = (1-pr)^2 |a|^2 + (1-p)^2 [(1-D)^2 + 2D(1-D)(1-pr) + D^2 (1-pr)^2] s.
pub fn closed_form_rho_wr(
    state: &PureState,
    p: f64,
    damping: f64,
    pr: f64,
) -> Result<DensityMatrix> {
    check_unit_interval("p", p, false)?;
    check_unit_interval("damping", damping, false)?;
    check_unit_interval("pr", pr, false)?;
    let (a, b, c) = (state.alpha(), state.beta(), state.gamma());
    let s = b.norm_sqr() + c.norm_sqr();
    let d = damping;
    let dbar = 1.0 - d;
    let pbar = 1.0 - p;
    let prbar = 1.0 - pr;

    let c2 = prbar * prbar * a.norm_sqr()
        + pbar * pbar * (dbar * dbar + 2.0 * d * dbar * prbar + d * d * prbar * prbar) * s;
    if c2 <= tol::DEGENERATE_PROB {
        return Err(Error::DegenerateOutcome { probability: c2 });
    }

    let mut diag = [0.0; 9];
    diag[0] = prbar * prbar * (a.norm_sqr() + pbar * pbar * d * d * s) / c2;
    diag[1] = pbar * pbar * d * dbar * prbar * b.norm_sqr() / c2;
    diag[3] = diag[1];
    diag[2] = pbar * pbar * d * dbar * prbar * c.norm_sqr() / c2;
    diag[6] = diag[2];
    diag[4] = pbar * pbar * dbar * dbar * b.norm_sqr() / c2;
    diag[8] = pbar * pbar * dbar * dbar * c.norm_sqr() / c2;

    let scale = |x: f64| Complex64::new(x / c2, 0.0);
    let upper = [
        (0, 4, a * b.conj() * scale(pbar * dbar * prbar)),
        (0, 8, a * c.conj() * scale(pbar * dbar * prbar)),
        (4, 8, b * c.conj() * scale(pbar * pbar * dbar * dbar)),
    ];
    DensityMatrix::new(hermitian_from_parts(diag, upper))
}
