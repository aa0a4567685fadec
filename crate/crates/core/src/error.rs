use thiserror::Error;

/// Errors raised by lattice objects and the operations on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty result: {0}")]
    Empty(String),

    #[error("lifted input not accepted by {0}")]
    LiftedInput(&'static str),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("class `{label}` does not accept a {kind}")]
    LabelKindMismatch { label: &'static str, kind: &'static str },

    #[error("representatives of a lifted function disagree at {0}")]
    InconsistentLift(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("objective is unbounded below: {0}")]
    Unbounded(String),

    #[error("rejection sampling exhausted its budget of {budget} candidates for {label}")]
    BudgetExhausted { label: &'static str, budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
