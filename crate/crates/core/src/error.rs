use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 input. `offset` is the byte position in the line.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("instance too large for {operation}: n = {n} exceeds cap {cap}")]
    InstanceTooLarge {
        operation: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("{operation} exceeded its time budget")]
    Timeout { operation: &'static str },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
