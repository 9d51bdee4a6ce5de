use credence_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("{0}")]
    Model(#[from] CoreError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 1 for I/O failures, 2 for bad configuration, 3 when the parameters
    /// violate the model's assumptions.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Csv(_) => 1,
            CliError::Model(CoreError::AssumptionViolation(_)) => 3,
            CliError::Model(_) | CliError::Config(_) => 2,
        }
    }
}
