use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("homology vector {0:?} is not primitive")]
    NonPrimitiveVector(Vec<i64>),
    #[error("homology vector has length {got}, expected {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("side genus {side} out of range 1..={max}")]
    SideGenusOutOfRange { side: i64, max: i64 },
    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("inverse letter in the vanishing-cycle part of a factorization")]
    InverseInPositivePart,
    #[error("expected {expected} flat pairs (one per base genus), found {got}")]
    FlatPairCountMismatch { expected: usize, got: usize },
    #[error("base genus {0} is too small; at least 1 is required")]
    BaseGenusTooSmall(i64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// `line` is 1-based; 0 means the file as a whole.
    #[error("{}", file_message(*line, message))]
    File { line: usize, message: String },
}

fn file_message(line: usize, message: &str) -> String {
    if line == 0 {
        message.to_owned()
    } else {
        format!("line {line}: {message}")
    }
}

/// A word-parsing failure, stamped with the byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    IndexOutOfRange { index: usize, max: usize },
    SideGenusOutOfRange { side: i64, max: i64 },
    NonPrimitiveVector,
    VectorLength { expected: usize, got: usize },
    InverseInPositivePart,
}

impl ParseError {
    pub fn new(offset: usize, kind: ParseErrorKind) -> Self {
        Self { offset, kind }
    }

    pub fn syntax(offset: usize, msg: impl Into<String>) -> Self {
        Self::new(offset, ParseErrorKind::Syntax(msg.into()))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::IndexOutOfRange { index, max } => {
                write!(f, "IndexOutOfRange: chain curve c{index} does not exist (valid: c1..c{max})")
            }
            ParseErrorKind::SideGenusOutOfRange { side, max } => {
                write!(f, "SideGenusOutOfRange: side genus {side} not in 1..={max}")
            }
            ParseErrorKind::NonPrimitiveVector => {
                write!(f, "NonPrimitiveVector: twist vector entries must have gcd 1")
            }
            ParseErrorKind::VectorLength { expected, got } => {
                write!(f, "twist vector has {got} entries, expected {expected}")
            }
            ParseErrorKind::InverseInPositivePart => {
                write!(f, "InverseInPositivePart: vanishing-cycle words admit positive twists only")
            }
        }
    }
}
