//! Front end for `chevalley-core`: report documents, CSV output, the
//! structure-constant cache and a parallel trial runner.
//!
//! Exit statuses: 0 success, 1 a theorem-backed check failed, 2 usage error
//! or refused configuration, 3 the conjecture search found a witness.

pub mod app;
pub mod cache;
pub mod dto;
pub mod format;
pub mod runner;
pub mod suite;

use chevalley_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_WITNESS: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Core(e) => match e {
                Error::JacobiViolation(..)
                | Error::AntisymmetryViolation(..)
                | Error::NonIntegralStructureConstant(..)
                | Error::NonIntegralDividedPower { .. }
                | Error::CanonicalMapNotHomomorphism
                | Error::NoInvariantForm
                | Error::RepresentationFailure(..)
                | Error::AutomorphismFailure { .. }
                | Error::InvariantMismatch(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            },
        }
    }
}
