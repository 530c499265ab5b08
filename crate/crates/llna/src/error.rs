use std::path::PathBuf;

use thiserror::Error;

/// Errors produced across the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("fetch failed for {id}: {reason}")]
    Fetch { id: String, reason: String },

    #[error("degenerate network: {0}")]
    DegenerateNetwork(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("rule parse error in {text:?}: {reason}")]
    RuleParse { text: String, reason: String },

    #[error("rule index {0} out of range [0, 262144)")]
    RuleIndexOutOfRange(u32),

    #[error("undefined density: node {0} has degree 0")]
    UndefinedDensity(usize),

    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("sequence too short: length {0}")]
    SequenceTooShort(usize),

    #[error("lag {lag} out of range (limit {limit})")]
    LagOutOfRange { lag: usize, limit: usize },

    #[error("classification error: {0}")]
    Classify(String),

    #[error("stratification error: class {class} has {have} samples, need {need}")]
    Stratification {
        class: String,
        have: usize,
        need: usize,
    },

    #[error("checkpoint does not match sweep config (hash {found} != {expected})")]
    CheckpointMismatch { found: String, expected: String },

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("missing upstream artifact for stage {stage}: {path}")]
    MissingStage { stage: String, path: PathBuf },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
