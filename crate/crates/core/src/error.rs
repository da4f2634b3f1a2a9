use thiserror::Error;

use crate::elements::Kind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} occurs more than once")]
    RepeatedPoint(String),

    #[error("point {0} is not covered by any block")]
    UncoveredPoint(String),

    #[error("empty block")]
    EmptyBlock,

    #[error("element {element} does not belong to {kind}")]
    KindMismatch { kind: Kind, element: String },

    #[error("{kind} has {predicted} elements at degree {degree}, above the cap of {cap}")]
    CapExceeded {
        kind: String,
        degree: usize,
        predicted: u128,
        cap: usize,
    },

    #[error("element {0} is not in the monoid")]
    NotInMonoid(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(String),

    #[error("the given set is not closed under right multiplication")]
    NotASubact,

    #[error("window radius {radius} is too small, need at least {needed}")]
    WindowTooSmall { radius: i64, needed: i64 },

    #[error("unknown symbol {0:?} in word, expected one of g, h, e")]
    BadSymbol(char),

    #[error("pair is not in the annihilator")]
    NotInAnnihilator,

    #[error("congruence carries no generation trace")]
    NoTrace,

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// A syntax or semantic error at a byte offset of the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}
