use pauli_core::PauliError;
use thiserror::Error;

/// Errors raised by the update rules and the matrix oracle.
#[derive(Debug, Error)]
pub enum UpdateError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("expected a tableau of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("tableau entry at the identity must be 1")]
    NotNormalized,
    #[error("measurement label must differ from the identity")]
    IdentityMeasurement,
    #[error("mixture weights must be nonnegative and sum to one")]
    BadWeights,
    #[error("malformed cnc operator: {0}")]
    BadOperator(String),
    #[error("no subspace orientation matches the requested parity")]
    NoOrientation,
    #[error("cannot normalize a zero-probability update")]
    ZeroProbability,
}
