use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("state enumeration for n = {n} exceeds the cap of {cap} nodes (predicted {predicted} states)")]
    EnumerationTooLarge { n: usize, cap: usize, predicted: u128 },

    #[error("node index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{context}: residual {residual:e} above tolerance after iteration cap")]
    ConvergenceFailure { context: String, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
