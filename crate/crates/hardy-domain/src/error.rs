use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Expression could not be parsed; `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numeric procedure could not classify its result. Carries the best
    /// available estimate so callers can still report something.
    #[error("inconclusive: {reason} (best estimate {estimate})")]
    Inconclusive { reason: String, estimate: f64 },

    /// Bracketed root finding failed.
    #[error("root finding failed: {0}")]
    RootFind(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn inconclusive(reason: impl Into<String>, estimate: f64) -> Self {
        Error::Inconclusive {
            reason: reason.into(),
            estimate,
        }
    }
}
