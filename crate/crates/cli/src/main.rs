//! Command-line experiment runner: parameter sweeps to CSV and plot scripts,
//! single-state inspection, and the built-in golden-value checks.
//!
//! Exit codes: 0 success, 1 config error, 2 numerical failure,
//! 3 verification failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use qutrit_wmr::{make_state, negativity, PureState};
use qutrit_wmr_cli::config::{Amplitude, SweepSpec, AXIS_STOP_CLAMP};
use qutrit_wmr_cli::output::{emit_csv, emit_plot_script, format_real};
use qutrit_wmr_cli::sweep::run_sweep;
use qutrit_wmr_cli::{verify, CliError};

#[derive(Parser)]
#[command(
    name = "qutrit-wmr",
    version,
    about = "Two-qutrit entanglement protection: sweeps, figures, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a parameter sweep from a config file and write CSV (and optionally
    /// a gnuplot script).
    Sweep {
        /// TOML sweep description (see the README for the schema)
        #[arg(long)]
        config: PathBuf,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Also write a gnuplot script here (requires `figure` in the config)
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Evaluate sweep points on this many worker threads
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Run the built-in golden-value checks and report pass/fail per check.
    Verify,
    /// Print negativity and validity for a pure state a|00> + b|11> + c|22>.
    ///
    /// Amplitudes are reals like 0.5 or comma-separated complex pairs like
    /// 0.5,-0.25.
    StateInfo {
        #[arg(long, value_parser = parse_amplitude, allow_hyphen_values = true)]
        alpha: Amplitude,
        #[arg(long, value_parser = parse_amplitude, allow_hyphen_values = true)]
        beta: Amplitude,
        #[arg(long, value_parser = parse_amplitude, allow_hyphen_values = true)]
        gamma: Amplitude,
    },
}

fn parse_amplitude(text: &str) -> Result<Amplitude, String> {
    let parse = |part: &str| -> Result<f64, String> {
        part.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad amplitude component {part:?}: {e}"))
    };
    match text.split_once(',') {
        Some((re, im)) => Ok(Amplitude::Complex(parse(re)?, parse(im)?)),
        None => Ok(Amplitude::Real(parse(text)?)),
    }
}

fn cmd_sweep(
    config: &Path,
    out: &Path,
    plot: Option<&Path>,
    parallel: Option<usize>,
) -> Result<(), CliError> {
    let spec = SweepSpec::load(config)?;
    let sweep = spec.validate()?;
    if sweep.clamped_stop {
        eprintln!(
            "warning: axis_range.stop = 1 is the degenerate limit; clamped to {AXIS_STOP_CLAMP}"
        );
    }
    let rows = run_sweep(&sweep, parallel)?;

    let mut csv = BufWriter::new(File::create(out)?);
    emit_csv(&rows, &mut csv)?;
    csv.flush()?;

    if let Some(plot_path) = plot {
        let figure = sweep.figure.ok_or_else(|| {
            CliError::Config("the config must set `figure` to write a plot script".into())
        })?;
        let csv_name = out.to_string_lossy();
        let mut script = BufWriter::new(File::create(plot_path)?);
        emit_plot_script(figure, sweep.axis, &rows, &csv_name, &mut script)?;
        script.flush()?;
    }
    eprintln!("wrote {} rows to {}", rows.len(), out.display());
    Ok(())
}

fn cmd_state_info(alpha: Amplitude, beta: Amplitude, gamma: Amplitude) -> Result<(), CliError> {
    let (a, b, c) = (alpha.to_complex(), beta.to_complex(), gamma.to_complex());
    let norm_sq = a.norm_sqr() + b.norm_sqr() + c.norm_sqr();
    println!("norm_squared = {}", format_real(norm_sq));
    match PureState::new(a, b, c) {
        Ok(state) => {
            println!("valid = true");
            let n = negativity(&make_state(&state))?;
            println!("negativity = {}", format_real(n));
            Ok(())
        }
        Err(e) => {
            println!("valid = false");
            Err(CliError::Config(e.to_string()))
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Sweep {
            config,
            out,
            plot,
            parallel,
        } => {
            cmd_sweep(&config, &out, plot.as_deref(), parallel)?;
            Ok(0)
        }
        Command::Verify => {
            let checks = verify::run_all();
            let stdout = std::io::stdout();
            let all = verify::report(&checks, &mut stdout.lock())?;
            Ok(if all { 0 } else { 3 })
        }
        Command::StateInfo { alpha, beta, gamma } => {
            cmd_state_info(alpha, beta, gamma)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
