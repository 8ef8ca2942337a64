//! File formats, reports and subcommands behind the `tps` binary.

use std::fmt;

pub mod commands;
pub mod dot;
pub mod format;
pub mod report;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const NOT_FOUND: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const INVALID: u8 = 3;
    pub const NOT_SEPARABLE: u8 = 4;
    pub const CONDITION: u8 = 5;
    pub const INTERNAL: u8 = 6;
}

/// Hard ceiling on input size; `TPS_MAX_POINTS` can only lower it.
pub const HARD_MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(exit::PARSE, message)
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Self::new(exit::INVALID, message)
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self::new(exit::INTERNAL, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<tps_core::Error> for CliError {
    fn from(e: tps_core::Error) -> Self {
        use tps_core::Error as E;
        let code = match &e {
            E::InvalidSpace(_) | E::InvalidInput(_) | E::TooLarge { .. } => exit::INVALID,
            E::NotSeparable(_) | E::NotApplicable(_) => exit::NOT_SEPARABLE,
            E::ConditionViolated { .. } => exit::CONDITION,
            E::Internal(_) => exit::INTERNAL,
        };
        CliError::new(code, e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// The point limit in force: `TPS_MAX_POINTS` if set, never above
/// [`HARD_MAX_POINTS`].
pub fn max_points() -> CliResult<usize> {
    match std::env::var("TPS_MAX_POINTS") {
        Err(_) => Ok(HARD_MAX_POINTS),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|n| n.min(HARD_MAX_POINTS))
            .map_err(|_| CliError::invalid(format!("TPS_MAX_POINTS={v:?} is not a number"))),
    }
}
