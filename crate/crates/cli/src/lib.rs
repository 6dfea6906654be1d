//! Command-line front end: argument parsing, file loading, dispatch and
//! report rendering. Exit codes: 0 success, 1 domain error, 2 I/O or
//! parse error.

pub mod args;
pub mod commands;
pub mod report;

use std::fs;
use std::path::Path;

use clap::Parser;
use gradord_core::formats::FormatError;
use thiserror::Error;

pub use args::{Cli, Format};
pub use report::Output;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Format {
        path: String,
        #[source]
        source: FormatError,
    },
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Format { source, .. } if !source.is_parse_error() => 1,
            _ => 2,
        }
    }

    /// Wraps any module error as a domain error, keeping its message.
    pub fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub(crate) fn with_path<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|source| match source {
        // a domain error raised while loading keeps the module's message
        e if !e.is_parse_error() => CliError::Domain(e.to_string()),
        source => CliError::Format {
            path: path.display().to_string(),
            source,
        },
    })
}

/// Runs one parsed invocation, writing the report to `--out` or returning
/// it for stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    cli.validate()?;
    let output = commands::dispatch(cli)?;
    let rendered = output.render(cli.format);
    if let Some(path) = &cli.out {
        fs::write(path, &rendered).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(String::new())
    } else {
        Ok(rendered)
    }
}

/// Parses `args` and runs them; returns the exit code after printing.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
