//! Acceptance suite: every release-gating criterion as one test, each
//! printing a PASS line with the measured values (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qutrit_wmr::linalg::{hermitian_eigen, partial_transpose_b, Complex64, ComplexMatrix};
use qutrit_wmr::{
    amplitude_damping_kraus, apply_channel_both, closed_form_rho_d, closed_form_rho_r,
    closed_form_rho_wr, make_state, negativity, optimal_reversal_scheme1, optimal_reversal_scheme2,
    reversal_operator, run_scheme1, run_scheme2, success_probability_scheme1,
    success_probability_scheme2, trit_flip, weak_measurement_operator, DampingParams,
    DensityMatrix, PureState, ReversalParams, SchemeResult, WeakMeasurementParams,
};
use qutrit_wmr_cli::verify::SUDDEN_DEATH_THRESHOLD;

fn max_ent() -> PureState {
    PureState::maximally_entangled()
}

fn esd_state() -> PureState {
    PureState::from_real((3.0f64 / 8.0).sqrt(), (5.0f64 / 8.0).sqrt(), 0.0).unwrap()
}

fn damped_negativity(state: &PureState, damping: f64) -> f64 {
    let damp = DampingParams::new(damping, damping).unwrap();
    let ch = amplitude_damping_kraus(damp);
    negativity(&apply_channel_both(&make_state(state), &ch, &ch).unwrap()).unwrap()
}

fn scheme1_optimal(state: &PureState, damping: f64) -> SchemeResult {
    let damp = DampingParams::new(damping, damping).unwrap();
    run_scheme1(state, damp, optimal_reversal_scheme1(damp).unwrap()).unwrap()
}

fn scheme2_optimal(state: &PureState, damping: f64, p: f64) -> SchemeResult {
    let damp = DampingParams::new(damping, damping).unwrap();
    let wm = WeakMeasurementParams::symmetric(p).unwrap();
    let rev = optimal_reversal_scheme2(damp, wm).unwrap();
    run_scheme2(state, wm, damp, rev).unwrap()
}

fn state_diff(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    a.matrix().sub(b.matrix()).max_abs()
}

#[test]
fn criterion_1_golden_damped_negativity() {
    let _ = damped_negativity(&max_ent(), 0.8); // warm pass
    let started = Instant::now();
    let measured = damped_negativity(&max_ent(), 0.8);
    let elapsed = started.elapsed();

    assert!(
        (measured - 0.04).abs() <= 0.005,
        "damped negativity {measured} outside 0.04 +/- 0.005"
    );
    assert!(
        elapsed < Duration::from_millis(1),
        "took {elapsed:?}, budget 1 ms"
    );
    println!(
        "criterion 1 PASS: damped negativity at 0.8 = {measured:.6} (0.04 +/- 0.005) in {:.3} ms",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_2_reversal_stays_finite() {
    let state = max_ent();
    let mut worst_gap = f64::INFINITY;
    for i in 0..200 {
        let damping = 0.99 * i as f64 / 199.0;
        let res = scheme1_optimal(&state, damping);
        worst_gap = worst_gap.min(res.n_protected - res.n_damped);
    }
    assert!(
        worst_gap >= -1e-12,
        "protected negativity fell below damped by {worst_gap:e}"
    );

    let edge = scheme1_optimal(&state, 0.99);
    assert!(
        edge.n_protected > 10.0 * edge.n_damped,
        "N_r(0.99) = {} is not more than 10x N_d(0.99) = {}",
        edge.n_protected,
        edge.n_damped
    );
    println!(
        "criterion 2 PASS: N_r(0.99) = {:.6} vs N_d(0.99) = {:.6}; min gap over 200 points {worst_gap:.2e}",
        edge.n_protected, edge.n_damped
    );
}

#[test]
fn criterion_3_sudden_death_threshold() {
    let state = esd_state();
    let (mut lo, mut hi) = (0.0f64, 0.99f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if damped_negativity(&state, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let measured = hi;
    assert!(measured <= 0.8, "threshold {measured} above 0.8");
    assert!(
        (measured - SUDDEN_DEATH_THRESHOLD).abs() <= 1e-8,
        "bisection threshold {measured} drifted from the frozen constant {SUDDEN_DEATH_THRESHOLD}"
    );

    for i in 0..200 {
        let damping = 0.99 * i as f64 / 199.0;
        if damping < measured {
            continue;
        }
        let res = scheme1_optimal(&state, damping);
        assert!(
            res.n_damped <= 1e-9 && res.n_protected <= 1e-9,
            "entanglement survives at damping {damping}: damped {}, protected {}",
            res.n_damped,
            res.n_protected
        );
    }
    println!("criterion 3 PASS: sudden-death threshold {measured:.9} (frozen {SUDDEN_DEATH_THRESHOLD:.9}); both negativities vanish past it");
}

#[test]
fn criterion_4_full_recovery_limit() {
    for (label, state) in [("max-ent", max_ent()), ("esd", esd_state())] {
        let res = scheme2_optimal(&state, 0.8, 0.999);
        let ratio = res.n_protected / res.n_initial;
        assert!(
            ratio >= 0.99,
            "{label}: recovery ratio {ratio} below 0.99 at damping 0.8, weak strength 0.999"
        );
        println!("criterion 4 PASS ({label}): recovery ratio {ratio:.6} >= 0.99");
    }
}

fn grid_states() -> Vec<PureState> {
    vec![
        max_ent(),
        esd_state(),
        PureState::from_real(0.2f64.sqrt(), 0.3f64.sqrt(), 0.5f64.sqrt()).unwrap(),
        PureState::from_real(0.7f64.sqrt(), 0.1f64.sqrt(), 0.2f64.sqrt()).unwrap(),
        PureState::new(
            Complex64::from_polar(0.5f64.sqrt(), 0.3),
            Complex64::new(0.25f64.sqrt(), 0.0),
            Complex64::from_polar(0.25f64.sqrt(), -1.1),
        )
        .unwrap(),
        PureState::new(
            Complex64::new(0.1f64.sqrt(), 0.0),
            Complex64::from_polar(0.8f64.sqrt(), 2.2),
            Complex64::new(0.1f64.sqrt(), 0.0),
        )
        .unwrap(),
    ]
}

const GRID_VALUES: [f64; 6] = [0.0, 0.18, 0.36, 0.54, 0.72, 0.9];

#[test]
fn criterion_5_closed_form_equivalence() {
    let started = Instant::now();
    let mut worst = 0.0f64;
    for state in grid_states() {
        for &damping in &GRID_VALUES {
            let damp = DampingParams::new(damping, damping).unwrap();
            let ch = amplitude_damping_kraus(damp);
            let sim = apply_channel_both(&make_state(&state), &ch, &ch).unwrap();
            worst = worst.max(state_diff(
                &sim,
                &closed_form_rho_d(&state, damping).unwrap(),
            ));

            let res = scheme1_optimal(&state, damping);
            worst = worst.max(state_diff(
                &res.state_protected,
                &closed_form_rho_r(&state, damping, damping).unwrap(),
            ));

            for &p in &GRID_VALUES {
                let wm = WeakMeasurementParams::symmetric(p).unwrap();
                let rev = optimal_reversal_scheme2(damp, wm).unwrap();
                let res = run_scheme2(&state, wm, damp, rev).unwrap();
                let formula = closed_form_rho_wr(&state, p, damping, rev.pr()).unwrap();
                worst = worst.max(state_diff(&res.state_protected, &formula));
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(worst <= 1e-12, "entrywise deviation {worst:e} above 1e-12");
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, budget 1 s"
    );
    println!(
        "criterion 5 PASS: max entrywise deviation {worst:.2e} <= 1e-12 over the 6x6x6 grid in {:.0} ms",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_6_success_probability_identities() {
    let mut worst = 0.0f64;
    for state in grid_states() {
        for &damping in &GRID_VALUES {
            let res = scheme1_optimal(&state, damping);
            let formula = success_probability_scheme1(&state, damping).unwrap();
            worst = worst.max((res.success_probability - formula).abs());

            for &p in &GRID_VALUES {
                let res = scheme2_optimal(&state, damping, p);
                let formula = success_probability_scheme2(&state, damping, p).unwrap();
                worst = worst.max((res.success_probability - formula).abs());
            }
        }
    }
    assert!(
        worst <= 1e-12,
        "probability deviation {worst:e} above 1e-12"
    );

    let tail1 = success_probability_scheme1(&max_ent(), 0.999).unwrap();
    let tail2 = success_probability_scheme2(&max_ent(), 0.8, 0.999).unwrap();
    assert!(tail1 < 0.01, "P1(0.999) = {tail1} not below 0.01");
    assert!(tail2 < 0.01, "P2(0.8, 0.999) = {tail2} not below 0.01");
    println!(
        "criterion 6 PASS: max |formula - pipeline| = {worst:.2e}; tails P1 = {tail1:.2e}, P2 = {tail2:.2e}"
    );
}

#[test]
fn criterion_7_reversal_decomposition() {
    let f = trit_flip();
    let mut worst = 0.0f64;
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
            worst = worst.max(built.sub(direct.operator()).max_abs());
        }
    }
    assert!(
        worst <= 1e-12,
        "decomposition deviation {worst:e} above 1e-12"
    );
    println!("criterion 7 PASS: max decomposition deviation {worst:.2e} over the 10x10 grid");
}

fn random_complex_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0)
    })
}

fn random_density_matrix(rng: &mut ChaCha8Rng, n: usize) -> DensityMatrix {
    let g = random_complex_matrix(rng, n);
    let gg = g.matmul(&g.dagger()).unwrap();
    let trace = gg.trace().unwrap().re;
    DensityMatrix::new(gg.scale(Complex64::new(1.0 / trace, 0.0))).unwrap()
}

fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let g = random_complex_matrix(rng, n);
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| g.get(i, j)).collect())
        .collect();
    for j in 0..n {
        for k in 0..j {
            let overlap: Complex64 = cols[k]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| a.conj() * b)
                .sum();
            let corrections: Vec<Complex64> = cols[k].iter().map(|&v| overlap * v).collect();
            for (value, correction) in cols[j].iter_mut().zip(corrections) {
                *value -= correction;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for value in &mut cols[j] {
            *value /= norm;
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

#[test]
fn criterion_8_randomized_property_suites() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(800);

    // Kraus completeness
    for _ in 0..1000 {
        let ch = amplitude_damping_kraus(DampingParams::new(rng.gen(), rng.gen()).unwrap());
        assert!(ch.completeness_deviation() <= 1e-9);
    }

    // trace / Hermiticity / positivity preservation through the channel
    for _ in 0..1000 {
        let rho = random_density_matrix(&mut rng, 9);
        let damp_a = DampingParams::new(rng.gen(), rng.gen()).unwrap();
        let damp_b = DampingParams::new(rng.gen(), rng.gen()).unwrap();
        let out = apply_channel_both(
            &rho,
            &amplitude_damping_kraus(damp_a),
            &amplitude_damping_kraus(damp_b),
        )
        .unwrap();
        assert!((out.matrix().trace().unwrap().re - 1.0).abs() <= 1e-9);
        assert!(out.matrix().hermiticity_deviation() <= 1e-9);
        assert!(hermitian_eigen(out.matrix()).unwrap().eigenvalues[0] >= -1e-9);
    }

    // partial-transpose involution
    for _ in 0..1000 {
        let h = random_complex_matrix(&mut rng, 9).hermitian_part();
        let twice = partial_transpose_b(&partial_transpose_b(&h).unwrap()).unwrap();
        assert_eq!(twice, h);
    }

    // local-unitary invariance of negativity
    for _ in 0..1000 {
        let rho = random_density_matrix(&mut rng, 9);
        let u = random_unitary(&mut rng, 3).kron(&random_unitary(&mut rng, 3));
        let rotated =
            DensityMatrix::new(u.matmul(rho.matrix()).unwrap().matmul(&u.dagger()).unwrap())
                .unwrap();
        let n0 = negativity(&rho).unwrap();
        let n1 = negativity(&rotated).unwrap();
        assert!((n0 - n1).abs() <= 1e-9, "{n0} vs {n1}");
    }

    // no entanglement creation from product states
    for _ in 0..1000 {
        let phase = rng.gen::<f64>() * std::f64::consts::TAU;
        let state = PureState::new(
            Complex64::from_polar(1.0, phase),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        )
        .unwrap();
        let damping = rng.gen::<f64>() * 0.95;
        let p = rng.gen::<f64>() * 0.9;
        let one = scheme1_optimal(&state, damping);
        assert!(one.n_damped <= 1e-9 && one.n_protected <= 1e-9);
        let two = scheme2_optimal(&state, damping, p);
        assert!(two.n_damped <= 1e-9 && two.n_protected <= 1e-9);
    }

    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "property suites took {elapsed:?}, budget 30 s"
    );
    println!(
        "criterion 8 PASS: five randomized suites x 1000 instances in {:.1} s",
        elapsed.as_secs_f64()
    );
}

const DETERMINISM_CONFIG: &str = r#"
scheme = "one"
axis = "D"

[state]
alpha = 0.5773502691896258
beta = 0.5773502691896258
gamma = 0.5773502691896258

[axis_range]
start = 0.0
stop = 0.99
steps = 30

[reversal]
mode = "optimal"
"#;

#[test]
fn criterion_9_sweep_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.toml");
    fs::write(&config, DETERMINISM_CONFIG).unwrap();

    let run = |csv: &str, extra: &[&str]| -> Vec<u8> {
        let path = dir.path().join(csv);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qutrit-wmr"));
        cmd.arg("sweep")
            .arg("--config")
            .arg(&config)
            .arg("--out")
            .arg(&path);
        for arg in extra {
            cmd.arg(arg);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success(), "{out:?}");
        fs::read(&path).unwrap()
    };

    let first = run("a.csv", &[]);
    let second = run("b.csv", &[]);
    let parallel = run("c.csv", &["--parallel", "4"]);
    assert_eq!(first, second, "serial runs differ");
    assert_eq!(first, parallel, "parallel run differs from serial");
    println!(
        "criterion 9 PASS: repeated and parallel sweeps byte-identical ({} bytes)",
        first.len()
    );
}
