//! Command-line front end for `tensorwalk-core`.
//!
//! [`run`] parses arguments, dispatches to the engines and writes JSON or
//! CSV. Big integers are always written as decimal strings. Exit codes are
//! [`EXIT_OK`], [`EXIT_CHECK_FAILED`] and [`EXIT_USAGE`].

use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};

use clap::Parser;
use tensorwalk_core::Guards;

pub mod args;
mod commands;
pub mod config;
pub mod output;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Environment variable that raises the enumeration guards.
pub const MAX_N_VAR: &str = "TENSORWALK_MAX_N";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Guards with the set-partition, inversion-sequence and tableau-walk
/// limits raised to `TENSORWALK_MAX_N` when it is set.
pub fn guards_from_env(value: Option<&str>) -> Result<Guards, CliError> {
    let mut guards = Guards::default();
    if let Some(v) = value {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={v} is not a nonnegative integer")))?;
        guards.max_n = guards.max_n.max(n);
        guards.max_tableau_n = guards.max_tableau_n.max(n);
    }
    Ok(guards)
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, guards: &Guards, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let format = cli.format;
    match commands::dispatch(cli, guards, stdin).and_then(|o| {
        o.write(format, out).map_err(CliError::Io)?;
        Ok(o.ok)
    }) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
