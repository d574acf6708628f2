//! Command-line front end for the `sharpmax` library.

mod args;
mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use thiserror::Error;

pub use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sharpmax::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// 2 for bad input, 3 for an exceeded budget, 4 for a violated invariant.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(sharpmax::Error::Budget(_)) => 3,
            CliError::Core(_) | CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Invariant(_) => 4,
        }
    }
}

/// Runs a parsed command, writing reports to `--output` or to `stdout` and
/// warnings to `stderr`.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    commands::run(cli, stdout, stderr)
}

/// Parses `argv` (program name first) and runs it, returning the exit code.
/// Diagnostics go to `stderr`.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
