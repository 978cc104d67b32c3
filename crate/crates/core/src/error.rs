use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// graph6 input rejected at the given byte offset.
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    /// Edge-list input rejected at the given (1-based) line.
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The operation's mathematical precondition does not hold for this input.
    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// An invariant that the theory guarantees was breached.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Graph6 { .. } | Error::EdgeList { .. })
    }
}
