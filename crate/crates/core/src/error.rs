use thiserror::Error;

use crate::Rational;

/// Errors raised by series, array, hypergeometric and identity operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series precision must be positive")]
    ZeroPrecision,

    #[error("coefficient {index} requested from a series known only to precision {precision}")]
    PrecisionExceeded { index: usize, precision: usize },

    #[error("series has zero constant term and is not invertible")]
    NonInvertible,

    #[error("inner series of a composition must have positive order, found order {order}")]
    CompositionOrder { order: usize },

    #[error("reversion needs a series of order exactly 1, found order {order}")]
    ReversionOrder { order: usize },

    #[error("rational powers need constant term 1, found {found}")]
    Normalization { found: Rational },

    #[error("implicit equation w = t*phi(w) needs phi(0) != 0")]
    LagrangePrecondition,

    #[error("denominator 1 - t*phi'(w) has zero constant term")]
    SingularInversion,

    #[error("Riordan array needs d(0) != 0")]
    InvalidD,

    #[error("A-sequence needs A(0) != 0")]
    ImproperA,

    #[error("operation needs a proper Riordan array (h(0) != 0)")]
    ImproperArray,

    #[error("triangle is not a Riordan array: A-sequence recurrence fails at ({n}, {k})")]
    NotRiordan { n: usize, k: usize },

    #[error("not enough data to recover the A-sequence: {0}")]
    InsufficientData(String),

    #[error("need {needed} rows of precision but only {available} are available")]
    PrecisionShortfall { needed: usize, available: usize },

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed triangle: {0}")]
    MalformedTriangle(String),

    #[error("entry ({n}, {k}) = {value} is not an integer")]
    NonIntegral { n: usize, k: usize, value: Rational },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
