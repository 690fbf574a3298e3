use thiserror::Error;

/// Errors produced by behavior, model, and classification operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A table does not match the shape dictated by its scenario.
    #[error("shape error: {0}")]
    Shape(String),

    /// An input violates a type invariant (negative weight, bad row sum, ...).
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// An operation received a numeric mode it does not support.
    #[error("mode error: {0}")]
    Mode(String),

    /// A setting or outcome index is outside the scenario's range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// An operation parameter is outside its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The deterministic-strategy count exceeds the configured cap.
    #[error("strategy count {count} exceeds cap {cap}")]
    SizeLimit { count: u128, cap: u128 },

    /// Two inputs refer to different scenarios.
    #[error("scenario mismatch: {0}")]
    ScenarioMismatch(String),

    /// A string does not parse as a rational number.
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    /// A matrix dimension does not fit the operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// An empirical table is missing samples for a scheduled cell.
    #[error("no samples for cell (x={x}, y={y})")]
    MissingCell { x: usize, y: usize },

    /// A sampling schedule contains no entries.
    #[error("sampling schedule is empty")]
    EmptySchedule,

    /// A JSON document does not match the expected schema.
    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
