use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("size guard exceeded: {what} needs {needed}, limit {limit}")]
    SizeGuard {
        what: String,
        needed: u128,
        limit: u128,
    },
    #[error("search budget exceeded: {needed} candidates, limit {limit}")]
    Budget { needed: u128, limit: u128 },
    #[error("invalid operad: {0}")]
    InvalidOperad(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
