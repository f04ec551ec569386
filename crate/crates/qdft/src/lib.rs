//! Batch front end: computes eigenvector candidates and identity checks and
//! writes them as flat CSV or JSON records.
//!
//! Exit codes: 0 when every gated residual passes, 1 on a numerical failure,
//! 2 on a usage error.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use config::{Cli, RunConfig};
pub use error::CliError;
pub use report::{Record, Report, Summary};

/// Runs one command and writes its report. `Ok(false)` means the report was
/// written but a gated check failed.
pub fn run(cli: Cli) -> Result<bool, CliError> {
    let config = RunConfig::from_cli(cli)?;
    let report = commands::run(config)?;
    report.write()?;
    Ok(report.summary.pass)
}
