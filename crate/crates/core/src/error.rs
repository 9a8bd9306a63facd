use thiserror::Error;

/// Errors raised by the library. Absence of a match or a failed
/// verification is a value, never an error.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet 1..={n}")]
    LetterOutOfRange { letter: u32, n: u8 },

    #[error("alphabet size must be in 1..=255, got {0}")]
    InvalidAlphabet(u32),

    #[error("alphabet bounds differ: {left} vs {right}")]
    AlphabetMismatch { left: u8, right: u8 },

    #[error("cannot parse word {0:?}")]
    ParseWord(String),

    #[error("letter {0} is not in the source of the morphism")]
    MorphismDomain(u8),

    #[error("invalid ordered morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: u8, hi: u8 },

    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("polynomial contexts differ: (n={n1}, D={d1}) vs (n={n2}, D={d2})")]
    ContextMismatch {
        n1: u8,
        d1: usize,
        n2: u8,
        d2: usize,
    },

    #[error("degree {degree} exceeds the degree bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("word length {len} does not match shape size {size}")]
    LengthMismatch { len: usize, size: usize },

    #[error("mixed insertion takes unprimed letters only, got {0}")]
    PrimedInput(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("Schur expansion left a nonzero remainder: {0}")]
    NonzeroRemainder(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
