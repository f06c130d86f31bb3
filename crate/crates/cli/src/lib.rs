//! Experiment runner around the `qutrit-wmr` library: scenario configs,
//! parameter sweeps with CSV output, plot-script generation, and built-in
//! golden-value verification. The `qutrit-wmr` binary is a thin wrapper over
//! these modules.

pub mod config;
mod error;
pub mod output;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};
