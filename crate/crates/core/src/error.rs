use thiserror::Error;

/// Errors produced by the knapsack laboratory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} bits, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("solution is infeasible: total weight {weight} exceeds capacity {capacity}")]
    Infeasible { weight: String, capacity: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{what} is {value}, which exceeds the limit of {limit}; {hint}")]
    CapacityExceeded {
        what: &'static str,
        value: String,
        limit: String,
        hint: &'static str,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("population is empty")]
    EmptyPopulation,

    #[error("optimum value is zero; approximation ratio is undefined")]
    ZeroOptimum,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
