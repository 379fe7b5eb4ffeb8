use thiserror::Error;

/// Errors produced by data loading, fitting and model I/O.
#[derive(Debug, Error)]
pub enum CalmError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("no rows")]
    EmptyData,

    #[error("missing cell at row {row}, column {column}")]
    MissingCell { row: usize, column: String },

    #[error("cannot parse {value:?} as number at row {row}, column {column}")]
    BadNumber {
        row: usize,
        column: String,
        value: String,
    },

    #[error("target column {0:?} not found in header")]
    TargetNotFound(String),

    #[error("binary task requires targets in {{0,1}}, found {value} at row {row}")]
    NonBinaryTarget { row: usize, value: f64 },

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("k-fold requires 2 <= k <= n, got k={k}, n={n}")]
    BadFoldCount { k: usize, n: usize },

    #[error("degenerate feature {0}: fewer than 2 distinct values")]
    DegenerateFeature(usize),

    #[error("empty active set")]
    EmptyActiveSet,

    #[error("invalid configuration: {0}")]
    BadConfig(String),

    #[error("model file has unknown version tag {0:?}")]
    UnknownModelVersion(String),

    #[error("model file is invalid: {0}")]
    BadModelFile(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CalmError>;
