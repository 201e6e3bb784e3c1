use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("definition error: {0}")]
    Definition(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parameter `{0}` has no declared reality; conjugation needs real or imaginary")]
    UndeclaredReality(String),
    #[error("series diverges: argument has a nonzero parameter-free part")]
    SeriesDivergence,
    #[error("leg mismatch: {0}")]
    LegMismatch(String),
    #[error("algebra mismatch: operands live in `{0}` and `{1}`")]
    AlgebraMismatch(String, String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("result is not polynomial: {0}")]
    NotPolynomial(String),
    #[error("{0}")]
    Config(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
