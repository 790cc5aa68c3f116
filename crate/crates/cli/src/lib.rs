//! Command-line driver for `monocount-core`: file formats, rendering and a
//! multi-threaded profile enumerator.

pub mod cli;
pub mod commands;
mod error;
pub mod io;
pub mod parallel;
pub mod render;

pub use commands::{execute, Outcome};
pub use error::CliError;

use clap::Parser;

/// Parses `args`, runs the command and returns `(stdout, stderr, exit code)`.
/// Usage errors map to the input exit code.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (e.to_string(), String::new(), 0),
                _ => {
                    let first = e.to_string().lines().next().unwrap_or("invalid arguments").to_string();
                    let first = first.trim_start_matches("error: ").to_string();
                    let err = CliError::Input(first);
                    (String::new(), format!("{err}\n"), err.exit_code())
                }
            };
        }
    };
    let outcome = execute(&cli.command);
    let stderr = outcome.error.as_ref().map(|e| format!("{e}\n")).unwrap_or_default();
    (outcome.stdout.clone(), stderr, outcome.exit_code())
}
