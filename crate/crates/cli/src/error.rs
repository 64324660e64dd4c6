use thiserror::Error;

/// Exit status for usage and configuration errors.
pub const USAGE_EXIT: i32 = 2;

/// Exit status when a verification suite fails.
pub const FAILURE_EXIT: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input, from flags or the config file or rejected by the library.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] rqcm::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
