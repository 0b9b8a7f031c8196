use thiserror::Error;

use crate::memo::InvariantKey;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero denominator in rational construction")]
    ZeroDenominator,

    /// A value that must be an integer came out fractional. This points at a
    /// formula or convention bug rather than at bad input.
    #[error("internal consistency: {key} evaluated to non-integral {value}")]
    NotIntegral { key: InvariantKey, value: String },

    #[error("internal consistency: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
