use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: String, right: String },

    #[error(
        "the Hochster-variant formula needs a pure ideal (generator degrees {min}..{max}); use betti_koszul instead"
    )]
    NotPure { min: usize, max: usize },

    #[error("structural error in splitting witness: {0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
