use thiserror::Error;

/// Errors produced by the engine. Everything here is a hard failure: either
/// bad input (unsupported factors, malformed descriptors) or an internal
/// consistency violation (a cyclotomic average that does not reduce to a
/// nonnegative integer signals corrupted class data, not a rounding issue).
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported factor #{index} (type {kind}, rank {rank}): {reason}")]
    UnsupportedFactor {
        index: usize,
        kind: String,
        rank: usize,
        reason: String,
    },

    #[error("invalid subgroup descriptor `{name}`: {reason}")]
    InvalidDescriptor { name: String, reason: String },

    #[error("unknown catalog entry `{name}`")]
    UnknownCatalog { name: String },

    #[error("catalog entry `{name}` rejected at load time: {reason}")]
    CatalogValidation { name: String, reason: String },

    #[error(
        "invariant dimension for `{subgroup}` at weight {weight:?} reduced to {value}, \
         which is not a nonnegative integer"
    )]
    Integrality {
        subgroup: String,
        weight: Vec<i64>,
        value: String,
    },

    #[error("mismatched truncations: {a} vs {b}")]
    TruncationMismatch { a: u32, b: u32 },

    #[error("mismatched group data: {0}")]
    GroupMismatch(String),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
