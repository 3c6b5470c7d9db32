use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input (non-prime characteristic, bad permutation, ...).
    InvalidInput(String),
    /// A resource cap (group order, subgroup enumeration, field size) would be exceeded.
    CapExceeded(String),
    /// The field does not contain a splitting field for the group.
    FieldTooSmall { degree: u32, required: u32 },
    /// A hypothesis of a checker does not hold for the given data.
    Hypothesis(String),
    /// An internal consistency check failed. Always a bug.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CapExceeded(msg) => write!(f, "resource cap exceeded: {msg}"),
            Error::FieldTooSmall { degree, required } => write!(
                f,
                "field degree {degree} is not a multiple of the splitting degree {required}"
            ),
            Error::Hypothesis(msg) => write!(f, "hypothesis not satisfied: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! invalid {
    ($($arg:tt)*) => { $crate::error::Error::InvalidInput(alloc::format!($($arg)*)) };
}
macro_rules! cap {
    ($($arg:tt)*) => { $crate::error::Error::CapExceeded(alloc::format!($($arg)*)) };
}
macro_rules! internal {
    ($($arg:tt)*) => { $crate::error::Error::Internal(alloc::format!($($arg)*)) };
}
pub(crate) use {cap, internal, invalid};
