//! Sweep execution: one scheme run per axis value, optionally on a thread
//! pool. Points are independent and the result vector is assembled in axis
//! order, so parallel and serial runs are byte-identical downstream.

use qutrit_wmr::{
    amplitude_damping_kraus, apply_channel_both, make_state, negativity, optimal_reversal_scheme1,
    optimal_reversal_scheme2, run_scheme1, run_scheme1_general, run_scheme2, run_scheme2_general,
    AsymmetricConfig, DampingParams, Error as CoreError, ReversalParams, SchemeResult,
    WeakMeasurementParams,
};

use crate::config::{ResolvedFixed, ResolvedReversal, ValidatedSweep};
use crate::{CliError, Result};

/// One sweep point. `n_protected` and `ratio` are absent on degenerate
/// points (the post-selected branch has no support there); `ratio` is also
/// absent when the initial state is separable.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub axis_value: f64,
    pub n_initial: f64,
    pub n_damped: f64,
    pub n_protected: Option<f64>,
    pub ratio: Option<f64>,
    pub success_probability: f64,
}

/// Per-qutrit parameters of one sweep point.
struct PointParams {
    wm: Option<(WeakMeasurementParams, WeakMeasurementParams)>,
    damp: (DampingParams, DampingParams),
}

fn core_param(e: CoreError) -> CliError {
    // parameters reaching the library out of range are a config problem
    match e {
        CoreError::ParamOutOfRange { .. } => CliError::Config(e.to_string()),
        other => CliError::Core(other),
    }
}

impl ValidatedSweep {
    fn point_params(&self, t: f64) -> Result<PointParams> {
        let sym_damp = |d: f64| DampingParams::new(d, d).map_err(core_param);
        match self.fixed {
            ResolvedFixed::One => Ok(PointParams {
                wm: None,
                damp: (sym_damp(t)?, sym_damp(t)?),
            }),
            ResolvedFixed::TwoAxisDamping { p, q } => {
                let wm = WeakMeasurementParams::new(p, q).map_err(core_param)?;
                Ok(PointParams {
                    wm: Some((wm, wm)),
                    damp: (sym_damp(t)?, sym_damp(t)?),
                })
            }
            ResolvedFixed::TwoAxisWeak { damping } => {
                let wm = WeakMeasurementParams::new(t, t).map_err(core_param)?;
                Ok(PointParams {
                    wm: Some((wm, wm)),
                    damp: (sym_damp(damping)?, sym_damp(damping)?),
                })
            }
            ResolvedFixed::OneGeneralFactors {
                d1,
                d2,
                big_d1,
                big_d2,
            } => Ok(PointParams {
                wm: None,
                damp: (
                    DampingParams::new(d1 * t, big_d1 * t).map_err(core_param)?,
                    DampingParams::new(d2 * t, big_d2 * t).map_err(core_param)?,
                ),
            }),
            ResolvedFixed::TwoGeneralFactors {
                d1,
                d2,
                big_d1,
                big_d2,
                p1,
                q1,
                p2,
                q2,
            } => Ok(PointParams {
                wm: Some((
                    WeakMeasurementParams::new(p1, q1).map_err(core_param)?,
                    WeakMeasurementParams::new(p2, q2).map_err(core_param)?,
                )),
                damp: (
                    DampingParams::new(d1 * t, big_d1 * t).map_err(core_param)?,
                    DampingParams::new(d2 * t, big_d2 * t).map_err(core_param)?,
                ),
            }),
            ResolvedFixed::TwoGeneralAbsolute {
                d1,
                d2,
                big_d1,
                big_d2,
            } => {
                let wm = WeakMeasurementParams::new(t, t).map_err(core_param)?;
                Ok(PointParams {
                    wm: Some((wm, wm)),
                    damp: (
                        DampingParams::new(d1, big_d1).map_err(core_param)?,
                        DampingParams::new(d2, big_d2).map_err(core_param)?,
                    ),
                })
            }
        }
    }

    fn run_point(&self, params: &PointParams) -> std::result::Result<SchemeResult, CoreError> {
        match self.fixed {
            ResolvedFixed::One
            | ResolvedFixed::TwoAxisDamping { .. }
            | ResolvedFixed::TwoAxisWeak { .. } => {
                let damp = params.damp.0;
                let rev = match self.reversal {
                    ResolvedReversal::Explicit { pr, qr } => ReversalParams::new(pr, qr)?,
                    ResolvedReversal::Optimal => match params.wm {
                        None => optimal_reversal_scheme1(damp)?,
                        Some((wm, _)) => optimal_reversal_scheme2(damp, wm)?,
                    },
                };
                match params.wm {
                    None => run_scheme1(&self.state, damp, rev),
                    Some((wm, _)) => run_scheme2(&self.state, wm, damp, rev),
                }
            }
            ResolvedFixed::OneGeneralFactors { .. } => {
                let cfg = AsymmetricConfig {
                    damp_a: params.damp.0,
                    damp_b: params.damp.1,
                    wm_a: WeakMeasurementParams::new(0.0, 0.0)?,
                    wm_b: WeakMeasurementParams::new(0.0, 0.0)?,
                };
                run_scheme1_general(&self.state, &cfg)
            }
            ResolvedFixed::TwoGeneralFactors { .. } | ResolvedFixed::TwoGeneralAbsolute { .. } => {
                let (wm_a, wm_b) = params
                    .wm
                    .expect("general scheme two always has weak stages");
                let cfg = AsymmetricConfig {
                    damp_a: params.damp.0,
                    damp_b: params.damp.1,
                    wm_a,
                    wm_b,
                };
                run_scheme2_general(&self.state, &cfg)
            }
        }
    }

    /// Negativity after damping alone (no weak measurement, no reversal),
    /// used for the row when the post-selected branch is degenerate.
    fn plain_damped_negativity(&self, params: &PointParams) -> std::result::Result<f64, CoreError> {
        let damped = apply_channel_both(
            &make_state(&self.state),
            &amplitude_damping_kraus(params.damp.0),
            &amplitude_damping_kraus(params.damp.1),
        )?;
        negativity(&damped)
    }

    /// Evaluate one axis point into a result row.
    pub fn evaluate_point(&self, t: f64) -> Result<ResultRow> {
        let params = self.point_params(t)?;
        match self.run_point(&params) {
            Ok(res) => {
                let ratio = if res.n_initial > 0.0 {
                    Some(res.n_protected / res.n_initial)
                } else {
                    None
                };
                Ok(ResultRow {
                    axis_value: t,
                    n_initial: res.n_initial,
                    n_damped: res.n_damped,
                    n_protected: Some(res.n_protected),
                    ratio,
                    success_probability: res.success_probability,
                })
            }
            Err(CoreError::DegenerateOutcome { .. }) => {
                let rho0 = make_state(&self.state);
                Ok(ResultRow {
                    axis_value: t,
                    n_initial: negativity(&rho0)?,
                    n_damped: self.plain_damped_negativity(&params)?,
                    n_protected: None,
                    ratio: None,
                    success_probability: 0.0,
                })
            }
            Err(other) => Err(core_param(other)),
        }
    }
}

/// Evaluate the whole sweep. With `parallel = Some(n)`, points are evaluated
/// on an n-thread pool; rows always come back ordered by axis value.
pub fn run_sweep(sweep: &ValidatedSweep, parallel: Option<usize>) -> Result<Vec<ResultRow>> {
    match parallel {
        None => sweep
            .axis_values
            .iter()
            .map(|&t| sweep.evaluate_point(t))
            .collect(),
        Some(threads) => {
            if threads == 0 {
                return Err(CliError::Config("--parallel must be at least 1".into()));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Config(format!("could not build thread pool: {e}")))?;
            pool.install(|| {
                use rayon::prelude::*;
                sweep
                    .axis_values
                    .par_iter()
                    .map(|&t| sweep.evaluate_point(t))
                    .collect()
            })
        }
    }
}
