use thiserror::Error;

/// Errors raised by the relation, split-preorder, representation and logic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} exceeds the limit {limit}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("size mismatch: {context} (expected {expected}, found {found})")]
    SizeMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range for a universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("not a split preorder: {0}")]
    NotSplitPreorder(&'static str),

    #[error("chain must have at least 2 elements, got {0}")]
    ChainTooSmall(usize),

    #[error("value {value} does not fit in a chain of size {chain}")]
    ValueOutOfChain { value: u32, chain: usize },

    #[error("witness precondition violated: ({code1}, {code2}) is not in the representation of the composite")]
    WitnessPrecondition { code1: usize, code2: usize },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("type error in `{term}`: {message}")]
    Type { term: String, message: String },

    #[error("`{construct}` is not allowed in the {fragment} fragment")]
    Fragment {
        construct: String,
        fragment: &'static str,
    },

    #[error("endpoint mismatch: {left} versus {right}")]
    EndpointMismatch { left: String, right: String },
}

pub type Result<T> = std::result::Result<T, Error>;
