use thiserror::Error;

use crate::quantities::Dimension;

/// Errors raised by the numerical layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: Dimension, right: Dimension },

    #[error("non-finite result in {context}")]
    NonFinite { context: &'static str },

    #[error("{what} must be a nonzero vector")]
    ZeroVector { what: &'static str },

    #[error("speed {speed:.17e} m/s is not below c")]
    SuperluminalInput { speed: f64 },

    #[error("step {step} rejected: speed {speed:.17e} m/s reached c")]
    StepRejected { step: usize, speed: f64 },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
