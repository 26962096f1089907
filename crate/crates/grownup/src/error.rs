//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty document: no element or text could be recovered")]
    EmptyDocument,

    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: [usize; 2],
        rhs: [usize; 2],
    },

    #[error("backward requires a scalar loss, got shape {0:?}")]
    NotScalarLoss([usize; 2]),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("batch contains pages from a single website; cannot build negative pairs")]
    SingleSiteBatch,

    #[error("malformed url: {0}")]
    MalformedUrl(String),

    #[error("missing gold text for page {0}")]
    MissingGold(String),

    #[error("split manifest problem: {0}")]
    SplitMismatch(String),

    #[error("graph record version {found} unsupported (expected {expected})")]
    VersionMismatch { found: u32, expected: u32 },

    #[error("corrupt graph record: {0}")]
    CorruptRecord(String),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("degenerate sample: zero variance")]
    DegenerateSample,

    #[error("invalid p-value {0}; must lie in (0, 1]")]
    InvalidP(f64),

    #[error("class {class} has {members} members, fewer than {folds} folds")]
    ClassTooSmall {
        class: String,
        members: usize,
        folds: usize,
    },

    #[error("zero-norm embedding cannot be classified")]
    ZeroEmbedding,

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    IoAt {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io_at(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::IoAt {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
