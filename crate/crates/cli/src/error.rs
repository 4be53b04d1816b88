use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] ringcodes::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for usage and input problems, 2 for violated hypotheses, 4 for exhausted budgets.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(ringcodes::Error::Hypothesis { .. }) => 2,
            CliError::Core(ringcodes::Error::BudgetExceeded { .. }) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
