use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),

    #[error("operation requires ring kind {needed}, got {got}")]
    UnsupportedRing { needed: String, got: String },

    #[error("arguments belong to different rings")]
    MixedRings,

    #[error("localized elements have different denominator bases")]
    MismatchedBase,

    #[error("ring asserted reduced but {elem} is nilpotent (exponent {exponent})")]
    ReducednessContradiction { elem: String, exponent: u32 },

    #[error("matrix index out of range: {0}")]
    MatrixShape(String),

    #[error("injectivity oracle returned an invalid certificate: {0}")]
    InvalidOracle(String),

    #[error("certificate does not match formula shape: {0}")]
    CertificateShape(String),

    #[error("derivation rejected at {path}: {reason}")]
    DerivationRejected { path: String, reason: String },

    #[error("unbound variable {0}")]
    UnboundVariable(String),

    #[error("search bound {bound} exhausted in {what}")]
    BoundExhausted { what: String, bound: u32 },
}

impl Error {
    pub fn unsupported(needed: &str, got: impl std::fmt::Display) -> Self {
        Error::UnsupportedRing {
            needed: needed.to_string(),
            got: got.to_string(),
        }
    }
}
