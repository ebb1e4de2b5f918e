//! CLI error type and the exit-code contract.
//!
//! Exit codes: 0 success; 2 usage errors (from argument parsing); 3 domain
//! errors (bad values, specs, digit overrides, configs); 4 divergence-guard
//! failures; 5 consistency failures (internal checks or a failing oracle
//! suite); 6 I/O errors.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Lib(betashift::Error),
    Config(String),
    Io(std::io::Error),
    /// The oracle suite ran and this many checks failed.
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(betashift::Error::Divergence { .. }) => 4,
            CliError::Lib(betashift::Error::Inconsistent { .. }) => 5,
            CliError::Lib(_) | CliError::Config(_) => 3,
            CliError::ChecksFailed(_) => 5,
            CliError::Io(_) => 6,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
            CliError::ChecksFailed(n) => write!(f, "oracle suite: {n} check(s) failed"),
        }
    }
}

impl From<betashift::Error> for CliError {
    fn from(e: betashift::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
