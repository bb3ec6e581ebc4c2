use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Syntax error in polynomial, grade, or grading-spec text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix index ({i}, {j}) out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("grade {0} does not belong to the grading structure")]
    ForeignGrade(String),

    #[error("window [{k}, {l}] out of range for a monomial of length {len}")]
    WindowOutOfRange { k: usize, l: usize, len: usize },

    #[error("sequence has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("substitution image for {variable} is not homogeneous of its grade")]
    GradeMismatch { variable: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("rule {rule} not applicable at window {window:?}: {reason}")]
    RuleNotApplicable {
        rule: String,
        window: Vec<usize>,
        reason: String,
    },

    #[error("polynomial has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("polynomial is not multilinear")]
    NotMultilinear,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed proof: {0}")]
    MalformedProof(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
