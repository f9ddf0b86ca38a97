use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A series was paired or skewed against something of higher degree than
    /// the series is known to.
    #[error("series known only through degree {cutoff}, but degree {needed} is required")]
    Precision { needed: usize, cutoff: usize },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Caller asked for integer coefficients and the element does not have them.
    #[error("coefficient of {partition} in the {basis} basis is not an integer: {value}")]
    NonIntegral {
        basis: char,
        partition: String,
        value: String,
    },

    /// A quantity that is an integer by theory came out non-integral. This
    /// always indicates a bug.
    #[error("internal integrality violation: {0}")]
    Integrality(String),

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },

    #[error("plethysm f[g] with an infinite f needs g without constant term")]
    ConstantTerm,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
