use thiserror::Error;

use crate::words::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is too small, need at least 2")]
    AlphabetTooSmall(u32),

    #[error("alphabet size overflows: {0} x {1}")]
    AlphabetOverflow(u32, u32),

    #[error("letter {letter} outside alphabet 1..={alphabet}")]
    LetterOutOfRange { letter: Letter, alphabet: u32 },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("operation needs a nonempty word")]
    EmptyWord,

    #[error("rotation index {index} outside 1..={len}")]
    RotationOutOfRange { index: usize, len: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("map is not a bijection: {0}")]
    NotABijection(String),

    #[error("truncation depth insufficient: {0}")]
    InsufficientDepth(String),

    #[error("truncated model would have {labels} labels, limit is {limit}")]
    ModelTooLarge { labels: usize, limit: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
