use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("labels {0} and {1} anticommute; sign function undefined")]
    NonCommuting(String, String),
    #[error("expected tableau of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("symmetry does not preserve the nonlocal labels")]
    NotNonlocalPreserving,
    #[error("matrix does not normalize the Pauli group")]
    NoSignedPermutation,
    #[error("invalid Pauli label: {0}")]
    BadLabel(String),
    #[error("outcome assignment inconsistent at {0}")]
    BadAssignment(String),
}
