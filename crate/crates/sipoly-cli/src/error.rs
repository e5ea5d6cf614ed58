//! Errors of the command-line front end and their exit codes.

use std::fmt;

/// A failed command.
#[derive(Debug)]
pub enum CliError {
    /// The input could not be read or parsed (exit code 2).
    Input(String),
    /// The input is well formed but the operation does not apply (exit
    /// code 3).
    Domain(String),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<sipoly::Error> for CliError {
    fn from(e: sipoly::Error) -> Self {
        match e {
            sipoly::Error::Parse { .. } => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Shorthand for command results.
pub type CliResult<T> = Result<T, CliError>;
