use thiserror::Error;

/// Crate-wide error type.
#[derive(Error, Debug)]
pub enum Error {
    /// Tensor extents do not satisfy an operation's shape contract.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A configuration value is out of its allowed range or inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    /// An API precondition was violated by the caller.
    #[error("contract error: {0}")]
    Contract(String),

    /// A forward operation produced a NaN or infinity.
    #[error("non-finite value produced by op `{op}`")]
    NonFinite { op: &'static str },

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A binary file does not conform to its format definition.
    #[error("format error: {0}")]
    Format(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
