use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] qutrit_wmr::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: 1 for config and i/o problems, 2 for numerical
    /// failures. (0 is success and 3 is reserved for verification failures.)
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 1,
            CliError::Core(e) => {
                if e.is_numerical() {
                    2
                } else {
                    1
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_classify_error_kinds() {
        assert_eq!(CliError::Config("bad".into()).exit_code(), 1);
        let rejected = qutrit_wmr::Error::NotNormalized { norm_sq: 2.0 };
        assert_eq!(CliError::Core(rejected).exit_code(), 1);
        let numerical = qutrit_wmr::Error::EigenNoConvergence {
            sweeps: 100,
            off_norm: 1.0,
        };
        assert_eq!(CliError::Core(numerical).exit_code(), 2);
        let degenerate = qutrit_wmr::Error::DegenerateOutcome { probability: 0.0 };
        assert_eq!(CliError::Core(degenerate).exit_code(), 2);
    }
}
