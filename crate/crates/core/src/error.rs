use thiserror::Error;

/// Errors raised by the algebra layer. Parse failures live in
/// [`crate::parse::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },

    #[error("d-group required: {0} has a minimal strictly positive element")]
    NotDGroup(String),

    #[error("lexicographic product required: {0} is not of the form lex(A,H)")]
    NotLexProduct(String),

    #[error("element {0} is not in the positive cone")]
    NotPositive(String),

    #[error("element {0} is not an idempotent")]
    NotIdempotent(String),

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown congruence `{0}`")]
    UnknownCongruence(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
