use thiserror::Error;

/// Errors shared across the exact and numeric kernels.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("elements belong to different structures: {0}")]
    StructureMismatch(String),
    #[error("non-composable pair: {0}")]
    NotComposable(String),
    #[error("invalid 2-complex: {0}")]
    InvalidComplex(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("missing label: {0}")]
    MissingLabel(String),
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("state is not defined at {0}")]
    UndefinedState(String),
    #[error("inadmissible categorified state: {0}")]
    InadmissibleState(String),
    #[error("unsupported localization pattern: {0}")]
    UnsupportedLocalization(String),
    #[error("rejected input: {0}")]
    Rejected(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
