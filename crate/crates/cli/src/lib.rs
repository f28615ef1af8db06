//! Problem files, reports and commands behind the `nccech` binary.

pub mod commands;
pub mod error;
pub mod problem;
pub mod report;

pub use commands::{run, Command, Overrides};
pub use error::CliError;
