//! Quantum operations on V-type qutrits and their application to two-qutrit
//! density matrices.
//!
//! A V-type qutrit has a ground level |0> and two excited levels |1>, |2>
//! that both decay to |0>. Three operation families are built here:
//!
//! - amplitude damping (a trace-preserving Kraus channel),
//! - the null-result weak measurement diag(1, sqrt(1-p), sqrt(1-q)),
//! - its probabilistic reversal
//!   diag(sqrt((1-pr)(1-qr)), sqrt(1-qr), sqrt(1-pr)).
//!
//! Selective operations are single measurement branches kept by
//! post-selection: applying one renormalizes the state and yields the branch
//! probability. The discarded click outcomes are never materialized; they
//! only show up as the complement of the kept branch's probability.

use crate::linalg::{hermitian_eigen, Complex64, ComplexMatrix};
use crate::tol;
use crate::{Error, Result};

/// Positive unit-trace matrix describing one qutrit (3x3) or a qutrit pair
/// (9x9).
///
/// Construction validates Hermiticity, trace, and positive semidefiniteness
/// within the tolerances in [`crate::tol`], then stores the Hermitian part so
/// every held matrix is exactly Hermitian; round-off drift from multi-stage
/// pipelines is swallowed there.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidDensityMatrix { reason };
        if !matrix.is_square() {
            return Err(invalid(format!(
                "must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let dim = matrix.rows();
        if dim != 3 && dim != 9 {
            return Err(invalid(format!("dimension must be 3 or 9, got {dim}")));
        }
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol::HERMITICITY {
            return Err(invalid(format!(
                "not Hermitian: max |A - A^dagger| = {deviation:.3e}"
            )));
        }
        let matrix = matrix.hermitian_part();
        let trace = matrix.trace().expect("square by construction").re;
        if (trace - 1.0).abs() > tol::DM_TRACE {
            return Err(invalid(format!("trace = {trace} (must be 1)")));
        }
        let eig = hermitian_eigen(&matrix)?;
        let min = eig.eigenvalues[0];
        if min < tol::DM_PSD_FLOOR {
            return Err(invalid(format!("smallest eigenvalue = {min:.3e}")));
        }
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

fn check_range(name: &'static str, value: f64, include_one: bool) -> Result<()> {
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

/// Decay probabilities of the two excited levels of one qutrit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampingParams {
    g1: f64,
    g2: f64,
}

impl DampingParams {
    /// `g1` is the decay probability of level |1>, `g2` of level |2>; both in [0, 1].
    pub fn new(g1: f64, g2: f64) -> Result<Self> {
        check_range("g1", g1, true)?;
        check_range("g2", g2, true)?;
        Ok(Self { g1, g2 })
    }

    pub fn g1(&self) -> f64 {
        self.g1
    }

    pub fn g2(&self) -> f64 {
        self.g2
    }
}

/// Strengths of the null-result weak measurement on the |1> -> |0> and
/// |2> -> |0> transitions. Strength 1 is rejected: that limit is an
/// irreversible projective measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakMeasurementParams {
    p: f64,
    q: f64,
}

impl WeakMeasurementParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_range("p", p, false)?;
        check_range("q", q, false)?;
        Ok(Self { p, q })
    }

    /// Same strength on both transitions.
    pub fn symmetric(p: f64) -> Result<Self> {
        Self::new(p, p)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// Strengths of the reversing measurement; both in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReversalParams {
    pr: f64,
    qr: f64,
}

impl ReversalParams {
    pub fn new(pr: f64, qr: f64) -> Result<Self> {
        check_range("pr", pr, false)?;
        check_range("qr", qr, false)?;
        Ok(Self { pr, qr })
    }

    pub fn symmetric(pr: f64) -> Result<Self> {
        Self::new(pr, pr)
    }

    pub fn pr(&self) -> f64 {
        self.pr
    }

    pub fn qr(&self) -> f64 {
        self.qr
    }
}

/// Ordered Kraus operators of a trace-preserving completely positive map.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    operators: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Validates that all operators are square of one dimension and that
    /// completeness holds: sum E^dagger E = I within
    /// [`tol::KRAUS_COMPLETENESS`] (max-norm).
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self> {
        let first = operators.first().ok_or_else(|| Error::DimensionMismatch {
            expected: "at least one Kraus operator".to_string(),
            found: "empty set".to_string(),
        })?;
        let dim = first.rows();
        for op in &operators {
            if !op.is_square() || op.rows() != dim {
                return Err(Error::DimensionMismatch {
                    expected: format!("{dim}x{dim}"),
                    found: format!("{}x{}", op.rows(), op.cols()),
                });
            }
        }
        let channel = Self { operators };
        let deviation = channel.completeness_deviation();
        if deviation > tol::KRAUS_COMPLETENESS {
            return Err(Error::IncompleteKraus { deviation });
        }
        Ok(channel)
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn dim(&self) -> usize {
        self.operators[0].rows()
    }

    /// max-norm of (sum E^dagger E) - I.
    pub fn completeness_deviation(&self) -> f64 {
        let dim = self.dim();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for op in &self.operators {
            sum = sum.add(
                &op.dagger()
                    .matmul(op)
                    .expect("square operators of equal dimension"),
            );
        }
        sum.sub(&ComplexMatrix::identity(dim)).max_abs()
    }
}

/// One non-unitary measurement branch kept by post-selection.
#[derive(Debug, Clone, PartialEq)]
pub struct SelectiveOperation {
    operator: ComplexMatrix,
}

impl SelectiveOperation {
    /// Validates that the operator is square and a valid measurement element:
    /// largest singular value at most 1 + [`tol::MEASUREMENT_SLACK`].
    pub fn new(operator: ComplexMatrix) -> Result<Self> {
        if !operator.is_square() {
            return Err(Error::NotSquare {
                rows: operator.rows(),
                cols: operator.cols(),
            });
        }
        let op = Self { operator };
        let sigma_max = op.max_singular_value()?;
        if sigma_max > 1.0 + tol::MEASUREMENT_SLACK {
            return Err(Error::InvalidMeasurement { sigma_max });
        }
        Ok(op)
    }

    pub fn operator(&self) -> &ComplexMatrix {
        &self.operator
    }

    /// Largest singular value, from the spectrum of M^dagger M.
    pub fn max_singular_value(&self) -> Result<f64> {
        let gram = self
            .operator
            .dagger()
            .matmul(&self.operator)
            .expect("square operator");
        let eig = hermitian_eigen(&gram)?;
        let max = eig.eigenvalues[eig.eigenvalues.len() - 1];
        Ok(max.max(0.0).sqrt())
    }

    /// The same measurement branch rescaled so its largest singular value is
    /// one. The renormalized post-measurement state is unchanged; the branch
    /// probability becomes the largest achievable for this filter, which is
    /// the probability convention the protection schemes use.
    pub fn maximized(&self) -> Result<Self> {
        let sigma_max = self.max_singular_value()?;
        if sigma_max <= tol::DEGENERATE_PROB {
            return Err(Error::InvalidMeasurement { sigma_max });
        }
        Ok(Self {
            operator: self.operator.scale(Complex64::new(1.0 / sigma_max, 0.0)),
        })
    }
}

/// Result of applying a selective operation: the renormalized state and the
/// probability of the kept branch.
#[derive(Debug, Clone)]
pub struct SelectiveOutcome {
    pub state: DensityMatrix,
    pub probability: f64,
}

/// Amplitude damping channel of one V-type qutrit.
///
/// Three operators: the no-jump branch diag(1, sqrt(1-g1), sqrt(1-g2)) and
/// one jump operator per decay path, sqrt(g1)|0><1| and sqrt(g2)|0><2|. The
/// two decay paths are treated as distinguishable (they populate different
/// environment modes), so no coherence builds up between them.
pub fn amplitude_damping_kraus(params: DampingParams) -> KrausChannel {
    let e0 = ComplexMatrix::from_real_diag(&[
        1.0,
        (1.0 - params.g1()).sqrt(),
        (1.0 - params.g2()).sqrt(),
    ]);
    let jump = |level: usize, rate: f64| {
        ComplexMatrix::from_fn(3, 3, |i, j| {
            if i == 0 && j == level {
                Complex64::new(rate.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    KrausChannel {
        operators: vec![e0, jump(1, params.g1()), jump(2, params.g2())],
    }
}

/// Null-result weak measurement diag(1, sqrt(1-p), sqrt(1-q)).
pub fn weak_measurement_operator(params: WeakMeasurementParams) -> SelectiveOperation {
    SelectiveOperation {
        operator: ComplexMatrix::from_real_diag(&[
            1.0,
            (1.0 - params.p()).sqrt(),
            (1.0 - params.q()).sqrt(),
        ]),
    }
}

/// Reversing measurement diag(sqrt((1-pr)(1-qr)), sqrt(1-qr), sqrt(1-pr)).
///
/// Equal to trit_flip . M3 . trit_flip . M3 . trit_flip with M3 the weak
/// measurement at the same strengths, and proportional to the inverse of M3.
pub fn reversal_operator(params: ReversalParams) -> SelectiveOperation {
    let pr_bar = 1.0 - params.pr();
    let qr_bar = 1.0 - params.qr();
    SelectiveOperation {
        operator: ComplexMatrix::from_real_diag(&[
            (pr_bar * qr_bar).sqrt(),
            qr_bar.sqrt(),
            pr_bar.sqrt(),
        ]),
    }
}

/// Cyclic level permutation: |0> -> |1> -> |2> -> |0>.
pub fn trit_flip() -> ComplexMatrix {
    ComplexMatrix::from_fn(3, 3, |i, j| {
        let hit = (i == 1 && j == 0) || (i == 2 && j == 1) || (i == 0 && j == 2);
        Complex64::new(if hit { 1.0 } else { 0.0 }, 0.0)
    })
}

fn check_two_qutrit_inputs(rho: &DensityMatrix, dim_a: usize, dim_b: usize) -> Result<()> {
    if rho.dim() != 9 || dim_a != 3 || dim_b != 3 {
        return Err(Error::DimensionMismatch {
            expected: "9x9 state with 3x3 operators on each side".to_string(),
            found: format!(
                "state {0}x{0}, operators {1}x{1} and {2}x{2}",
                rho.dim(),
                dim_a,
                dim_b
            ),
        });
    }
    Ok(())
}

/// Apply independent Kraus channels to the two qutrits:
/// rho -> sum_{j,k} (E_j (x) F_k) rho (E_j (x) F_k)^dagger.
pub fn apply_channel_both(
    rho: &DensityMatrix,
    channel_a: &KrausChannel,
    channel_b: &KrausChannel,
) -> Result<DensityMatrix> {
    check_two_qutrit_inputs(rho, channel_a.dim(), channel_b.dim())?;
    let mut out = ComplexMatrix::zeros(9, 9);
    for ej in channel_a.operators() {
        for fk in channel_b.operators() {
            let k = ej.kron(fk);
            let term = k.matmul(rho.matrix())?.matmul(&k.dagger())?;
            out = out.add(&term);
        }
    }
    DensityMatrix::new(out)
}

/// Apply one selective operation per qutrit and keep the branch.
///
/// With M = m_a (x) m_b the unnormalized output is M rho M^dagger; its trace
/// is the branch probability and the state is the trace-normalized matrix.
/// A probability at or below [`tol::DEGENERATE_PROB`] is an error: the
/// post-measurement state is undefined there.
pub fn apply_selective_both(
    rho: &DensityMatrix,
    m_a: &SelectiveOperation,
    m_b: &SelectiveOperation,
) -> Result<SelectiveOutcome> {
    check_two_qutrit_inputs(rho, m_a.operator().rows(), m_b.operator().rows())?;
    let m = m_a.operator().kron(m_b.operator());
    let unnormalized = m.matmul(rho.matrix())?.matmul(&m.dagger())?;
    let raw = unnormalized.trace()?.re;
    if raw <= tol::DEGENERATE_PROB {
        return Err(Error::DegenerateOutcome { probability: raw });
    }
    let state = DensityMatrix::new(unnormalized.scale(Complex64::new(1.0 / raw, 0.0)))?;
    Ok(SelectiveOutcome {
        state,
        probability: raw.clamp(0.0, 1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::{make_state, PureState};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_ent() -> DensityMatrix {
        let amp = 1.0 / 3.0f64.sqrt();
        make_state(&PureState::from_real(amp, amp, amp).unwrap())
    }

    #[test]
    fn damping_params_validate_range() {
        assert!(DampingParams::new(0.0, 1.0).is_ok());
        assert!(matches!(
            DampingParams::new(-0.1, 0.5),
            Err(Error::ParamOutOfRange { name: "g1", .. })
        ));
        assert!(matches!(
            DampingParams::new(0.5, 1.1),
            Err(Error::ParamOutOfRange { name: "g2", .. })
        ));
        assert!(matches!(
            WeakMeasurementParams::new(1.0, 0.0),
            Err(Error::ParamOutOfRange { name: "p", .. })
        ));
        assert!(matches!(
            ReversalParams::new(0.0, 1.0),
            Err(Error::ParamOutOfRange { name: "qr", .. })
        ));
        assert!(matches!(
            DampingParams::new(f64::NAN, 0.0),
            Err(Error::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn zero_damping_is_the_identity_channel() {
        let ch = amplitude_damping_kraus(DampingParams::new(0.0, 0.0).unwrap());
        assert_eq!(ch.operators()[0], ComplexMatrix::identity(3));
        assert_eq!(ch.operators()[1].max_abs(), 0.0);
        assert_eq!(ch.operators()[2].max_abs(), 0.0);
        assert!(ch.completeness_deviation() <= tol::KRAUS_COMPLETENESS);
    }

    #[test]
    fn full_damping_sends_everything_to_the_ground_state() {
        let ch = amplitude_damping_kraus(DampingParams::new(1.0, 1.0).unwrap());
        let rho = apply_channel_both(&max_ent(), &ch, &ch).unwrap();
        assert!((rho.matrix().get(0, 0) - c(1.0, 0.0)).norm() < 1e-12);
        for i in 1..9 {
            assert!(rho.matrix().get(i, i).norm() < 1e-12);
        }
    }

    #[test]
    fn kraus_channel_rejects_incomplete_sets() {
        let half = ComplexMatrix::from_real_diag(&[0.5, 0.5, 0.5]);
        assert!(matches!(
            KrausChannel::new(vec![half]),
            Err(Error::IncompleteKraus { .. })
        ));
        assert!(KrausChannel::new(vec![ComplexMatrix::identity(3)]).is_ok());
    }

    #[test]
    fn weak_measurement_matches_its_definition() {
        let m = weak_measurement_operator(WeakMeasurementParams::new(0.0, 0.0).unwrap());
        assert_eq!(*m.operator(), ComplexMatrix::identity(3));

        let m = weak_measurement_operator(WeakMeasurementParams::new(0.75, 0.0).unwrap());
        assert_eq!(
            *m.operator(),
            ComplexMatrix::from_real_diag(&[1.0, 0.5, 1.0])
        );
    }

    #[test]
    fn reversal_matches_its_definition() {
        let m = reversal_operator(ReversalParams::new(0.0, 0.0).unwrap());
        assert_eq!(*m.operator(), ComplexMatrix::identity(3));

        let m = reversal_operator(ReversalParams::new(0.75, 0.0).unwrap());
        assert_eq!(
            *m.operator(),
            ComplexMatrix::from_real_diag(&[0.5, 1.0, 0.5])
        );
    }

    #[test]
    fn reversal_decomposes_into_flips_and_weak_measurements() {
        let f = trit_flip();
        for i in 0..10 {
            for j in 0..10 {
                let p = i as f64 * 0.1;
                let q = j as f64 * 0.1;
                let m3 = weak_measurement_operator(WeakMeasurementParams::new(p, q).unwrap());
                let built = f
                    .matmul(m3.operator())
                    .unwrap()
                    .matmul(&f)
                    .unwrap()
                    .matmul(m3.operator())
                    .unwrap()
                    .matmul(&f)
                    .unwrap();
                let direct = reversal_operator(ReversalParams::new(p, q).unwrap());
                assert!(built.sub(direct.operator()).max_abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn scaled_reversal_inverts_the_weak_measurement() {
        // (1/sqrt((1-p)(1-q))) F M3 F M3 F applied after M3 is the identity
        let p = 0.6;
        let q = 0.3;
        let m3 = weak_measurement_operator(WeakMeasurementParams::new(p, q).unwrap());
        let mr = reversal_operator(ReversalParams::new(p, q).unwrap());
        let scale = 1.0 / ((1.0 - p) * (1.0 - q)).sqrt();
        let product = mr
            .operator()
            .scale(c(scale, 0.0))
            .matmul(m3.operator())
            .unwrap();
        assert!(product.sub(&ComplexMatrix::identity(3)).max_abs() <= 1e-12);
    }

    #[test]
    fn trit_flip_conjugation_permutes_diagonals() {
        let f = trit_flip();
        let d = ComplexMatrix::from_real_diag(&[1.0, 2.0, 3.0]);
        let out = f.matmul(&d).unwrap().matmul(&f.dagger()).unwrap();
        assert_eq!(out, ComplexMatrix::from_real_diag(&[3.0, 1.0, 2.0]));
    }

    #[test]
    fn weak_measurement_and_reversal_commute_exactly() {
        let m3 = weak_measurement_operator(WeakMeasurementParams::new(0.4, 0.7).unwrap());
        let mr = reversal_operator(ReversalParams::new(0.2, 0.5).unwrap());
        let ab = m3.operator().matmul(mr.operator()).unwrap();
        let ba = mr.operator().matmul(m3.operator()).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn identity_channels_leave_the_state_unchanged() {
        let rho = max_ent();
        let ch = amplitude_damping_kraus(DampingParams::new(0.0, 0.0).unwrap());
        let out = apply_channel_both(&rho, &ch, &ch).unwrap();
        assert!(out.matrix().sub(rho.matrix()).max_abs() < 1e-14);
    }

    #[test]
    fn identity_selective_operations_have_probability_one() {
        let rho = max_ent();
        let id = SelectiveOperation::new(ComplexMatrix::identity(3)).unwrap();
        let out = apply_selective_both(&rho, &id, &id).unwrap();
        assert!((out.probability - 1.0).abs() < 1e-14);
        assert!(out.state.matrix().sub(rho.matrix()).max_abs() < 1e-14);
    }

    #[test]
    fn weak_measurement_survival_probability() {
        // amplitudes (a, (1-p) b, (1-q) c) survive, so the branch probability
        // is |a|^2 + (1-p)^2 |b|^2 + (1-q)^2 |c|^2
        let state = PureState::from_real(0.2f64.sqrt(), 0.5f64.sqrt(), 0.3f64.sqrt()).unwrap();
        let rho = make_state(&state);
        let (p, q) = (0.35, 0.6);
        let m3 = weak_measurement_operator(WeakMeasurementParams::new(p, q).unwrap());
        let out = apply_selective_both(&rho, &m3, &m3).unwrap();
        let expected = 0.2 + (1.0 - p).powi(2) * 0.5 + (1.0 - q).powi(2) * 0.3;
        assert!((out.probability - expected).abs() < 1e-12);
    }

    #[test]
    fn maximized_reversal_probability_matches_the_optimal_branch() {
        // after symmetric damping D, the maximized reversal at pr = D succeeds
        // with probability (1-D)^2 [1 + (|b|^2+|c|^2)(2D + D^2)]
        let damping = 0.5;
        let rho = max_ent();
        let ch = amplitude_damping_kraus(DampingParams::new(damping, damping).unwrap());
        let damped = apply_channel_both(&rho, &ch, &ch).unwrap();
        let mr = reversal_operator(ReversalParams::new(damping, damping).unwrap())
            .maximized()
            .unwrap();
        let out = apply_selective_both(&damped, &mr, &mr).unwrap();
        let s = 2.0 / 3.0;
        let expected = (1.0 - damping).powi(2) * (1.0 + s * (2.0 * damping + damping * damping));
        assert!((out.probability - expected).abs() < 1e-12);
    }

    #[test]
    fn selective_probability_agrees_between_two_routes() {
        // trace(M rho M^dagger) vs trace(M^dagger M rho)
        let state = PureState::from_real(0.6, 0.0, -0.8).unwrap();
        let rho = make_state(&state);
        let m3 = weak_measurement_operator(WeakMeasurementParams::new(0.3, 0.55).unwrap());
        let out = apply_selective_both(&rho, &m3, &m3).unwrap();

        let m = m3.operator().kron(m3.operator());
        let alt = m
            .dagger()
            .matmul(&m)
            .unwrap()
            .matmul(rho.matrix())
            .unwrap()
            .trace()
            .unwrap()
            .re;
        assert!((out.probability - alt).abs() <= 1e-12);
    }

    #[test]
    fn degenerate_outcome_is_an_error() {
        let rho = make_state(&PureState::from_real(1.0, 0.0, 0.0).unwrap());
        let tiny =
            SelectiveOperation::new(ComplexMatrix::from_real_diag(&[1e-7, 0.0, 0.0])).unwrap();
        assert!(matches!(
            apply_selective_both(&rho, &tiny, &tiny),
            Err(Error::DegenerateOutcome { .. })
        ));
    }

    #[test]
    fn selective_operation_rejects_amplifying_operators() {
        let big = ComplexMatrix::from_real_diag(&[1.5, 1.0, 1.0]);
        assert!(matches!(
            SelectiveOperation::new(big),
            Err(Error::InvalidMeasurement { .. })
        ));
    }

    #[test]
    fn density_matrix_rejects_bad_inputs() {
        // wrong dimension
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.5, 0.5])).is_err());
        // bad trace
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.5, 0.5, 0.5])).is_err());
        // not positive semidefinite
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[1.5, -0.25, -0.25])).is_err());
        // not Hermitian
        let skew = ComplexMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                c(1.0 / 3.0, 0.0)
            } else if i < j {
                c(0.1, 0.0)
            } else {
                c(-0.1, 0.0)
            }
        });
        assert!(DensityMatrix::new(skew).is_err());
        // valid
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.2, 0.3, 0.5])).is_ok());
    }

    #[test]
    fn apply_channel_rejects_dimension_mismatch() {
        let rho3 = DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.2, 0.3, 0.5])).unwrap();
        let ch = amplitude_damping_kraus(DampingParams::new(0.1, 0.1).unwrap());
        assert!(matches!(
            apply_channel_both(&rho3, &ch, &ch),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
