use std::path::PathBuf;

/// Errors produced across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("duplicate index {0} in sparse support")]
    DuplicateIndex(usize),

    #[error("linear system is inconsistent: right-hand side is not in the column space")]
    Inconsistent,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alist parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("CSS condition violated: row {x_row} of H_X and row {z_row} of H_Z overlap on an odd number of qubits")]
    CssViolation { x_row: usize, z_row: usize },

    #[error("vector has a nonzero syndrome under H_Z (check {check} fires)")]
    NonzeroSyndrome { check: usize },

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("config field `{field}`: {msg}")]
    Config { field: String, msg: String },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            msg: msg.into(),
        }
    }
}
