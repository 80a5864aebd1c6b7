use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("infeasible specification: {0}")]
    InfeasibleSpec(String),

    /// A lift was asked to colour a triangle whose edges already use every
    /// palette colour.
    #[error("precondition violated: triangle {triangle:?} carries every palette colour")]
    PreconditionViolated { triangle: [usize; 3] },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An instance is too large for exhaustive treatment.
    #[error("refused: {reason}")]
    Refused { reason: String },

    /// A search came back below a size it is proven to reach. Carries the
    /// offending instance so it can be replayed.
    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
