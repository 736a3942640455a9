use thiserror::Error;

use crate::algebra::Var;
use crate::word::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("indeterminate {0} has no assigned value")]
    Unassigned(Var),

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },

    #[error("Pfaffian of a word of odd length {0}")]
    OddLength(usize),

    #[error("word has a repeated letter {0}")]
    RepeatedLetter(Letter),

    #[error("letter {0} does not occur in the word")]
    NotInWord(Letter),

    #[error("letter {0} is already barred")]
    AlreadyBarred(Letter),

    #[error("letter {letter} is outside the form's index set (dimension {dim})")]
    LetterOutOfRange { letter: Letter, dim: usize },

    #[error("word of {0} distinct letters exceeds the 64-letter memo limit")]
    WordTooLong(usize),

    #[error("matrix is not skew-symmetric: entry ({i},{j}) = {a} but entry ({j},{i}) = {b}")]
    NotSkew { i: usize, j: usize, a: String, b: String },

    #[error("odd dimension {0}: Pfaffians need an even number of letters")]
    OddDimension(usize),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("zero pivot in condensation: layer {layer} entry ({row},{col}) is zero")]
    ZeroPivot { layer: usize, row: usize, col: usize },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn parse(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Parse { what, reason: reason.into() }
    }
}
