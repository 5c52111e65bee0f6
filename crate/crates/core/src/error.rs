use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("ring descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(String, String),

    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("payload does not fit ring {ring}: {detail}")]
    Payload { ring: String, detail: String },

    #[error("unknown inverse kind `{0}`")]
    UnknownKind(String),

    #[error("unknown theorem tag `{0}`")]
    UnknownTheorem(String),

    #[error("inverse kind `{0}` is verify-only and has no compute path")]
    NoComputePath(String),

    #[error("missing input `{0}` for kind `{1}`")]
    MissingInput(&'static str, String),

    #[error("corpus too large: {tuples} tuples x {scan} scan exceeds budget {budget}")]
    CorpusTooLarge { tuples: u128, scan: u128, budget: u128 },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
