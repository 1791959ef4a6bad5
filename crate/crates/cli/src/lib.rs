//! Library side of the `hsbound` command-line tool: argument definitions,
//! dataset parsing, report documents and the subcommand implementations.

pub mod args;
pub mod commands;
mod error;
pub mod input;
pub mod report;

pub use args::Cli;
pub use commands::{run, Exit, Outcome};
pub use error::CliError;
pub use report::ReportDocument;
