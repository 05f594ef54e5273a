use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input or an argument outside its domain.
    #[error("usage error: {0}")]
    Usage(String),

    /// A precondition of an operation was not met by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A brute-force route was asked for a size above its cap.
    #[error("{what} at n = {n} exceeds the cap of {cap}")]
    ResourceCap { what: String, n: usize, cap: usize },

    /// Series arithmetic hit a non-exact division or mismatched orders.
    #[error("series error: {0}")]
    Series(String),

    /// Two routes that must agree did not.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
