use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Core(#[from] pdg_core::Error),
}
