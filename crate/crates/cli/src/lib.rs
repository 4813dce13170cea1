//! Command-line front end: system files, report documents, command dispatch and the
//! built-in regression suite.

pub mod args;
pub mod commands;
pub mod corpus;
pub mod fixtures;
pub mod format;
pub mod report;
pub mod tables;
pub mod verify;

pub use args::Cli;
pub use commands::{run, CliError, Outcome};
