use thiserror::Error;

/// Errors raised when inputs fall outside the domain of an operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} lies outside [0, 1]")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid X state: {0}")]
    InvalidState(String),

    #[error("parameter {name} = {value} outside its range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: String,
    },

    #[error("symmetric state is not normalized (norm² = {norm_sq})")]
    Unnormalized { norm_sq: f64 },

    #[error("odd spin coherent state at eta = 0 is defined only as a limit; use the Dicke state |1>_N")]
    LimitOnly,
}

pub type Result<T> = std::result::Result<T, Error>;
