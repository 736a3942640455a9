//! Library side of the `pfaff` command: file commands, the identity
//! registry, and the numeric and symbolic verification drivers.

pub mod commands;
pub mod registry;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pfaff_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("unknown identity {0:?}; known identities: {known}", known = registry::names().join(", "))]
    UnknownIdentity(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for input and usage problems, 1 when a well-formed computation
    /// could not be carried out.
    pub fn exit_code(&self) -> i32 {
        use pfaff_core::Error as E;
        match self {
            CliError::Core(E::ZeroPivot { .. } | E::Singular | E::DivisionByZero) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}
