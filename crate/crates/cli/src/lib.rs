//! Command implementations behind the `ringcodes` binary. Every command returns a
//! [`report::Report`] whose JSON form is deterministic.

pub mod certify;
pub mod commands;
pub mod config;
pub mod error;
pub mod grid;
pub mod report;
pub mod search;
pub mod verify;

pub use config::{GridConfig, JobConfig};
pub use error::{CliError, Result};
pub use report::{Outcome, Report};
