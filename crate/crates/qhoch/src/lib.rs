//! File formats, the derivation bank, the identity suite and the
//! subcommands of the `qhoch` command-line tool.

pub mod bank;
pub mod commands;
pub mod config;
pub mod error;
pub mod formats;
pub mod scalar;
pub mod suite;

pub use commands::{Format, Output, Window};
pub use config::{AlgebraSource, RunConfig, SpaceSource};
pub use error::{CliError, CliResult};
