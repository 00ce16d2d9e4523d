//! Command-line front end for `newtonfoil-core`.
//!
//! Sweeps of the force functional, optimization of the apex parameter,
//! profile export and a self-check suite. All numeric output is CSV with
//! summary lines prefixed by `# `.

pub mod check;
pub mod commands;
pub mod config;
pub mod csv;

pub use commands::{cmd_optimize, cmd_profile, cmd_sweep, Report};
pub use config::{QuadMethod, RunConfig};

use std::io;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] newtonfoil_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// Process exit code: 2 for usage problems, 1 for failed computations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(newtonfoil_core::Error::Domain { .. }) => 2,
            CliError::Core(newtonfoil_core::Error::InvalidQuadrature(_)) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
