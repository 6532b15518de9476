use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    /// Held-out samples disagree with the fitted Laurent polynomial.
    #[error("interpolation consistency check failed at sample {point}: fitted {fitted}, sampled {sampled}")]
    Consistency {
        point: String,
        fitted: String,
        sampled: String,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// Failing vertices, as 1-based facet lists.
    #[error("characteristic matrix fails the unimodularity condition at vertices {0:?}")]
    InvalidLambda(Vec<Vec<usize>>),

    #[error("spin^c class {gamma:?} does not reduce to w2 modulo 2")]
    InvalidSpinc { gamma: Vec<i64> },

    #[error("circle {xi:?} is not generic: tangent weight vanishes at vertex {vertex:?}")]
    DegenerateCircle { xi: Vec<i64>, vertex: Vec<usize> },

    #[error("inconsistent spin^c parity across fixed points: {0}")]
    Parity(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("ring is not of connected-sum type: {0}")]
    Shape(String),

    /// A hypothesis of a theorem fails on the given input. `kernel` carries a
    /// witness if one was found anyway.
    #[error("hypothesis violated: {reason}")]
    Hypothesis {
        reason: String,
        kernel: Option<Vec<i64>>,
    },

    #[error("{message} (line {line})")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
