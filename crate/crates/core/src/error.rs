use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("width violation at {pos}: {msg}")]
    /// `pos` is a byte offset for parsed text, otherwise a 1-based slice number.
    Width { pos: usize, msg: String },

    #[error("orientation inconsistency at {pos}: {msg}")]
    Orientation { pos: usize, msg: String },

    #[error("boundary count mismatch: {left} vs {right}")]
    BoundaryMismatch { left: usize, right: usize },

    #[error("expected {expected} boundary endpoints, found {found}")]
    EndpointCount { expected: String, found: usize },

    #[error("subset has odd cardinality {0}")]
    OddSubset(usize),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("at most {max} boundary points are supported, got {got}")]
    TooManyPoints { max: usize, got: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("move not applicable: {0}")]
    InapplicableMove(String),

    #[error("braid closure has {0} components; the oracle only handles knots")]
    MultiComponent(usize),

    #[error("evaluators disagree: {0}")]
    EvaluatorMismatch(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
