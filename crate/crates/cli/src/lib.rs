//! Library half of the `brim` binary: the family file format and the
//! command implementations, separated so tests can drive them directly.

pub mod commands;
pub mod family_file;

use thiserror::Error;

/// Command failures, each mapped to a process exit code:
/// computation failures exit 1, verification failures exit 2, parse and
/// usage errors exit 3.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Compute(brim::Error),
    #[error("{context}: {source}")]
    ComputeAt {
        context: String,
        source: brim::Error,
    },
    #[error("{0}")]
    Verification(String),
    #[error("{0}: {1}")]
    Parse(String, family_file::ParseError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Compute(_) | Failure::ComputeAt { .. } => 1,
            Failure::Verification(_) => 2,
            Failure::Parse(..) | Failure::Io(_) | Failure::Usage(_) => 3,
        }
    }
}
