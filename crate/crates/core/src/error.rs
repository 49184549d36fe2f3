use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("i = j gives a zero-length run")]
    DegenerateRun,

    #[error("sampling failed after {0} attempts")]
    SamplingFailed(usize),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("malformed alist at line {line}: {msg}")]
    MalformedAlist { line: usize, msg: String },

    #[error("no C-part exists: M·message has odd weight")]
    ParityObstruction,

    #[error("no unconsumed position available while extending a chain")]
    ChainStuck,

    #[error("multisupport sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("chains cancelled to the zero word")]
    DegenerateZero,

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("code dimension {0} exceeds the enumeration guard ({1})")]
    TooLarge(usize, usize),

    #[error("tolerance hypothesis violated: t = {t} must exceed 2k = {limit}")]
    HypothesisViolated { t: usize, limit: usize },

    #[error("malformed certificate at line {line}: {msg}")]
    MalformedCertificate { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
