//! The `holant` command-line tool: argument parsing, instance documents and
//! the subcommand implementations, kept in a library so they can be tested
//! without spawning processes.

pub mod app;
pub mod doc;
pub mod examples;

pub use app::{run, Cli, CliError};
