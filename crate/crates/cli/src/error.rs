use gjms_exact::ExactError;
use gjms_models::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot parse Schouten file {path}: {reason}")]
    SchoutenFile { path: String, reason: String },
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    /// Usage and input errors exit with 2; failures while computing with 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Model(_) | CliError::Exact(_) => 1,
            _ => 2,
        }
    }
}
