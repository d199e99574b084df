use std::fmt;

/// Errors raised while building rings or evaluating ideal predicates.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring of size {size} exceeds the size cap {cap}")]
    SizeCapExceeded { size: u128, cap: usize },
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("the ideal is the whole ring")]
    ImproperIdeal,
    #[error("the ideal is the zero ideal")]
    ZeroIdeal,
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("the zero ideal is not N-prime, so the ring is not an N-integral domain")]
    NotNIntegralDomain,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A ring expression could not be parsed. `offset` is a byte offset into the
/// input and may equal the input length when the input ended early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at offset {}: expected {}, found {}",
            self.offset, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}
