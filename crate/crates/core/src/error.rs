use alloc::boxed::Box;
use alloc::string::String;

use crate::Rational;

/// Errors raised by space construction and the separation/extension
/// constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The space itself is malformed: unknown or duplicate points, an open
    /// family that is not a topology, a map that is not total or onto.
    #[error("invalid space: {0}")]
    InvalidSpace(String),

    /// An argument violates the operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A size guard was hit.
    #[error("too large: {what} exceeds limit {limit}")]
    TooLarge { what: String, limit: usize },

    /// No separator or function with the requested properties exists.
    #[error("not separable: {0}")]
    NotSeparable(String),

    /// The operation needs a separation property the space lacks.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The extension condition fails: `D(f⁻¹[0,lower]) ∩ I(f⁻¹[upper,1])`
    /// contains `point`.
    #[error("extension condition violated between levels {lower} and {upper} at point {point}")]
    ConditionViolated { lower: Box<Rational>, upper: Box<Rational>, point: usize },

    /// A construction produced output that fails its own postconditions.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
