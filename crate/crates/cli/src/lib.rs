//! Command-line front end: coefficient tables (`compute`) and identity
//! reports (`verify`).
//!
//! Exit codes: 0 success or all cells passed, 1 some verification cell
//! failed, 2 usage error.

pub mod args;
mod compute;
mod report;

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Parser;
use degenpoly::Rational;

pub use args::Cli;

/// Relative `--out` paths resolve against this directory when it is set.
pub const OUT_DIR_ENV: &str = "DEGENPOLY_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

pub(crate) fn parse_rational(text: &str, flag: &str) -> Result<Rational, CliError> {
    Rational::from_str(text.trim()).or_else(|_| {
        usage(format!(
            "{flag}: expected `sym` or a rational p/q, got {text:?}"
        ))
    })
}

pub(crate) fn parse_ks(text: &str) -> Result<Vec<i64>, CliError> {
    let ks: Result<Vec<i64>, _> = text.split(',').map(|p| p.trim().parse::<i64>()).collect();
    match ks {
        Ok(ks) if !ks.is_empty() => Ok(ks),
        _ => usage(format!(
            "--ks: expected comma-separated integers, got {text:?}"
        )),
    }
}

fn resolve_out(out: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if out.is_relative() => Path::new(&dir).join(out),
        _ => out.to_path_buf(),
    }
}

pub(crate) fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) if path != Path::new("-") => std::fs::write(resolve_out(path), bytes)?,
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Parses `argv` and runs the selected subcommand, returning the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        args::Command::Compute(a) => compute::run(&a).map(|()| EXIT_OK),
        args::Command::Verify(a) => report::run(&a),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            if matches!(err, CliError::Usage(_)) {
                eprintln!("run `degenpoly --help` for the list of flags");
            }
            EXIT_USAGE
        }
    }
}
