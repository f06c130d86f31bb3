//! Sweep configuration: a TOML document describing one scheme run over one
//! axis. Unknown keys anywhere are hard errors; silent typos in physics
//! parameters are the costliest failure mode this tool has.
//!
//! ```toml
//! scheme = "two"            # one | two | one-general | two-general
//! axis = "p"                # D | p
//! figure = "fig3b"          # optional; required when a plot script is written
//!
//! [state]                   # amplitudes, real or [re, im]
//! alpha = 0.5773502691896258
//! beta = 0.5773502691896258
//! gamma = 0.5773502691896258
//!
//! [axis_range]
//! start = 0.0
//! stop = 0.99
//! steps = 200               # optional, default 200
//!
//! [fixed]                   # scheme/axis-dependent named parameters
//! D = 0.8
//!
//! [reversal]
//! mode = "optimal"          # or "explicit" with pr = ..., qr = ...
//! ```
//!
//! Per scheme and axis, `[fixed]` must contain exactly:
//!
//! - `one` + axis `D`: nothing.
//! - `two` + axis `D`: `p` (optional `q`, defaults to `p`).
//! - `two` + axis `p`: `D`.
//! - `one-general` + axis `D`: `d1`, `d2`, `D1`, `D2` as scale factors
//!   multiplying the axis value (per-qutrit decay of levels one and two).
//! - `two-general` + axis `D`: the four scale factors plus absolute weak
//!   strengths `p1`, `q1`, `p2`, `q2`.
//! - `two-general` + axis `p`: `d1`, `d2`, `D1`, `D2` as absolute decay
//!   probabilities; the axis drives all four weak strengths.
//!
//! Explicit reversal is available for the symmetric schemes only; the general
//! schemes always use their per-qutrit optimal reversal.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use qutrit_wmr::linalg::Complex64;
use qutrit_wmr::PureState;

use crate::{CliError, Result};

/// Sweep stop values of exactly 1 are clamped here: every optimal reversal
/// diverges at parameter 1 (the projective limit).
pub const AXIS_STOP_CLAMP: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    One,
    Two,
    OneGeneral,
    TwoGeneral,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::One => "one",
            Scheme::Two => "two",
            Scheme::OneGeneral => "one-general",
            Scheme::TwoGeneral => "two-general",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    #[serde(rename = "D")]
    Damping,
    #[serde(rename = "p")]
    WeakStrength,
}

impl Axis {
    pub fn label(self) -> &'static str {
        match self {
            Axis::Damping => "D",
            Axis::WeakStrength => "p",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3b,
    Fig4a,
    Fig4b,
}

impl FigureId {
    pub fn expected_axis(self) -> Axis {
        match self {
            FigureId::Fig2a | FigureId::Fig2b | FigureId::Fig3a | FigureId::Fig4a => Axis::Damping,
            FigureId::Fig3b | FigureId::Fig4b => Axis::WeakStrength,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4a => "fig4a",
            FigureId::Fig4b => "fig4b",
        }
    }
}

/// One amplitude: a plain real or a `[re, im]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Amplitude {
    Real(f64),
    Complex(f64, f64),
}

impl Amplitude {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Amplitude::Real(re) => Complex64::new(re, 0.0),
            Amplitude::Complex(re, im) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpec {
    pub alpha: Amplitude,
    pub beta: Amplitude,
    pub gamma: Amplitude,
}

fn default_steps() -> usize {
    200
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisRange {
    pub start: f64,
    pub stop: f64,
    #[serde(default = "default_steps")]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReversalMode {
    Optimal,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReversalSpec {
    pub mode: ReversalMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pr: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qr: Option<f64>,
}

/// The full sweep description as found in a config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub scheme: Scheme,
    pub axis: Axis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<FigureId>,
    pub state: StateSpec,
    pub axis_range: AxisRange,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fixed: BTreeMap<String, f64>,
    pub reversal: ReversalSpec,
}

impl SweepSpec {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResolvedReversal {
    Optimal,
    Explicit { pr: f64, qr: f64 },
}

/// Fixed parameters resolved against the scheme/axis combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResolvedFixed {
    /// scheme one, axis D
    One,
    /// scheme two, axis D: fixed weak strengths
    TwoAxisDamping { p: f64, q: f64 },
    /// scheme two, axis p: fixed damping
    TwoAxisWeak { damping: f64 },
    /// scheme one-general, axis D: per-qutrit decay scale factors
    OneGeneralFactors {
        d1: f64,
        d2: f64,
        big_d1: f64,
        big_d2: f64,
    },
    /// scheme two-general, axis D: scale factors plus fixed weak strengths
    TwoGeneralFactors {
        d1: f64,
        d2: f64,
        big_d1: f64,
        big_d2: f64,
        p1: f64,
        q1: f64,
        p2: f64,
        q2: f64,
    },
    /// scheme two-general, axis p: absolute per-qutrit decay probabilities
    TwoGeneralAbsolute {
        d1: f64,
        d2: f64,
        big_d1: f64,
        big_d2: f64,
    },
}

/// A sweep spec that passed validation, with the axis grid laid out.
#[derive(Debug, Clone)]
pub struct ValidatedSweep {
    pub scheme: Scheme,
    pub axis: Axis,
    pub figure: Option<FigureId>,
    pub state: PureState,
    pub axis_values: Vec<f64>,
    pub reversal: ResolvedReversal,
    pub fixed: ResolvedFixed,
    /// True when the requested stop of 1 was clamped to [`AXIS_STOP_CLAMP`];
    /// the caller should warn.
    pub clamped_stop: bool,
}

fn config_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Config(msg.into()))
}

fn check_unit(field: &str, value: f64) -> Result<f64> {
    if value.is_finite() && (0.0..1.0).contains(&value) {
        Ok(value)
    } else {
        config_err(format!("{field} = {value} must lie in [0, 1)"))
    }
}

/// Keys `fixed` must carry for this scheme/axis pair (required, optional).
fn expected_keys(
    scheme: Scheme,
    axis: Axis,
) -> Result<(&'static [&'static str], &'static [&'static str])> {
    match (scheme, axis) {
        (Scheme::One, Axis::Damping) => Ok((&[], &[])),
        (Scheme::Two, Axis::Damping) => Ok((&["p"], &["q"])),
        (Scheme::Two, Axis::WeakStrength) => Ok((&["D"], &[])),
        (Scheme::OneGeneral, Axis::Damping) => Ok((&["d1", "d2", "D1", "D2"], &[])),
        (Scheme::TwoGeneral, Axis::Damping) => {
            Ok((&["d1", "d2", "D1", "D2", "p1", "q1", "p2", "q2"], &[]))
        }
        (Scheme::TwoGeneral, Axis::WeakStrength) => Ok((&["d1", "d2", "D1", "D2"], &[])),
        (scheme, axis) => config_err(format!(
            "scheme \"{}\" cannot sweep axis \"{}\"",
            scheme.name(),
            axis.label()
        )),
    }
}

impl SweepSpec {
    /// Full semantic validation: axis range, state normalization, fixed-key
    /// sets, reversal mode, and figure/axis consistency.
    pub fn validate(&self) -> Result<ValidatedSweep> {
        // axis range
        let range = self.axis_range;
        if !range.start.is_finite() || !range.stop.is_finite() {
            return config_err("axis_range values must be finite");
        }
        if !(0.0..1.0).contains(&range.start) {
            return config_err(format!(
                "axis_range.start = {} must lie in [0, 1)",
                range.start
            ));
        }
        if range.stop > 1.0 {
            return config_err(format!(
                "axis_range.stop = {} must lie in (start, 1]",
                range.stop
            ));
        }
        let mut clamped_stop = false;
        let stop = if range.stop == 1.0 {
            clamped_stop = true;
            AXIS_STOP_CLAMP
        } else {
            range.stop
        };
        if stop <= range.start {
            return config_err(format!(
                "axis_range.start = {} must be below the (possibly clamped) stop = {stop}",
                range.start
            ));
        }
        if range.steps < 2 {
            return config_err(format!(
                "axis_range.steps = {} must be at least 2",
                range.steps
            ));
        }
        let step = (stop - range.start) / (range.steps - 1) as f64;
        let axis_values: Vec<f64> = (0..range.steps)
            .map(|i| {
                if i + 1 == range.steps {
                    stop
                } else {
                    range.start + step * i as f64
                }
            })
            .collect();

        // state
        let state = PureState::new(
            self.state.alpha.to_complex(),
            self.state.beta.to_complex(),
            self.state.gamma.to_complex(),
        )
        .map_err(|e| CliError::Config(format!("state: {e}")))?;

        // fixed keys
        let (required, optional) = expected_keys(self.scheme, self.axis)?;
        for key in self.fixed.keys() {
            if !required.contains(&key.as_str()) && !optional.contains(&key.as_str()) {
                return config_err(format!(
                    "unknown key fixed.{key} for scheme \"{}\" with axis \"{}\"",
                    self.scheme.name(),
                    self.axis.label()
                ));
            }
        }
        for key in required {
            if !self.fixed.contains_key(*key) {
                return config_err(format!(
                    "fixed.{key} is required for scheme \"{}\" with axis \"{}\"",
                    self.scheme.name(),
                    self.axis.label()
                ));
            }
        }
        let get = |key: &str| self.fixed[key];

        let fixed = match (self.scheme, self.axis) {
            (Scheme::One, Axis::Damping) => ResolvedFixed::One,
            (Scheme::Two, Axis::Damping) => {
                let p = check_unit("fixed.p", get("p"))?;
                let q = match self.fixed.get("q") {
                    Some(&q) => check_unit("fixed.q", q)?,
                    None => p,
                };
                ResolvedFixed::TwoAxisDamping { p, q }
            }
            (Scheme::Two, Axis::WeakStrength) => ResolvedFixed::TwoAxisWeak {
                damping: check_unit("fixed.D", get("D"))?,
            },
            (Scheme::OneGeneral, Axis::Damping) => {
                let [d1, d2, big_d1, big_d2] = self.damping_factors(stop)?;
                ResolvedFixed::OneGeneralFactors {
                    d1,
                    d2,
                    big_d1,
                    big_d2,
                }
            }
            (Scheme::TwoGeneral, Axis::Damping) => {
                let [d1, d2, big_d1, big_d2] = self.damping_factors(stop)?;
                ResolvedFixed::TwoGeneralFactors {
                    d1,
                    d2,
                    big_d1,
                    big_d2,
                    p1: check_unit("fixed.p1", get("p1"))?,
                    q1: check_unit("fixed.q1", get("q1"))?,
                    p2: check_unit("fixed.p2", get("p2"))?,
                    q2: check_unit("fixed.q2", get("q2"))?,
                }
            }
            (Scheme::TwoGeneral, Axis::WeakStrength) => ResolvedFixed::TwoGeneralAbsolute {
                d1: check_unit("fixed.d1", get("d1"))?,
                d2: check_unit("fixed.d2", get("d2"))?,
                big_d1: check_unit("fixed.D1", get("D1"))?,
                big_d2: check_unit("fixed.D2", get("D2"))?,
            },
            _ => unreachable!("rejected by expected_keys"),
        };

        // reversal
        let reversal = match self.reversal.mode {
            ReversalMode::Optimal => {
                if self.reversal.pr.is_some() || self.reversal.qr.is_some() {
                    return config_err(
                        "reversal.pr / reversal.qr are only meaningful with mode = \"explicit\"",
                    );
                }
                ResolvedReversal::Optimal
            }
            ReversalMode::Explicit => {
                if matches!(self.scheme, Scheme::OneGeneral | Scheme::TwoGeneral) {
                    return config_err(format!(
                        "reversal.mode = \"explicit\" is not supported for scheme \"{}\"; the general schemes use their per-qutrit optimal reversal",
                        self.scheme.name()
                    ));
                }
                let pr = self.reversal.pr.ok_or_else(|| {
                    CliError::Config(
                        "reversal.pr is required when reversal.mode = \"explicit\"".into(),
                    )
                })?;
                let qr = self.reversal.qr.ok_or_else(|| {
                    CliError::Config(
                        "reversal.qr is required when reversal.mode = \"explicit\"".into(),
                    )
                })?;
                ResolvedReversal::Explicit {
                    pr: check_unit("reversal.pr", pr)?,
                    qr: check_unit("reversal.qr", qr)?,
                }
            }
        };

        // figure/axis consistency
        if let Some(figure) = self.figure {
            if figure.expected_axis() != self.axis {
                return config_err(format!(
                    "figure {} expects axis \"{}\", config uses axis \"{}\"",
                    figure.name(),
                    figure.expected_axis().label(),
                    self.axis.label()
                ));
            }
        }

        Ok(ValidatedSweep {
            scheme: self.scheme,
            axis: self.axis,
            figure: self.figure,
            state,
            axis_values,
            reversal,
            fixed,
            clamped_stop,
        })
    }

    /// The four decay scale factors for the general schemes on the damping
    /// axis, checked against the largest axis value they will multiply.
    fn damping_factors(&self, stop: f64) -> Result<[f64; 4]> {
        let mut out = [0.0; 4];
        for (slot, key) in ["d1", "d2", "D1", "D2"].iter().enumerate() {
            let factor = self.fixed[*key];
            if !factor.is_finite() || factor < 0.0 {
                return config_err(format!(
                    "fixed.{key} = {factor} must be a finite factor >= 0"
                ));
            }
            if factor * stop >= 1.0 {
                return config_err(format!(
                    "fixed.{key} = {factor} puts the decay probability at {} for the sweep stop {stop}; it must stay below 1",
                    factor * stop
                ));
            }
            out[slot] = factor;
        }
        Ok(out)
    }
}
