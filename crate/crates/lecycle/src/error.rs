use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The CLI maps these onto process exit codes; see [`Error::exit_code`].
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown variable `{name}` at line {line}, column {col}")]
    UnknownVariable { name: String, line: usize, col: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("no cached basis for the requested monomial order")]
    MissingBasis,

    #[error("non-isolated singularity: dim_0 of the critical locus is {s}")]
    NonIsolated { s: i64 },

    #[error("existence failure at level {level}: {detail}")]
    ExistenceFailure { level: usize, detail: String },

    #[error("no sufficiently generic coordinates found after {tries} shear attempts")]
    GenericityExhausted { tries: u32 },

    #[error("improper intersection: {0}")]
    ImproperIntersection(String),

    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownVariable { .. } | Error::InvalidInput(_) => 2,
            Error::RingMismatch | Error::IndexOutOfRange { .. } => 2,
            Error::ExistenceFailure { .. }
            | Error::GenericityExhausted { .. }
            | Error::ImproperIntersection(_)
            | Error::HypothesisFailure(_) => 3,
            Error::NonIsolated { .. } => 4,
            Error::ResourceLimit(_) | Error::MissingBasis => 5,
            Error::InternalInconsistency(_) => 6,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
