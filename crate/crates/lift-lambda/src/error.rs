use exact_polytope::PolyError;
use mermin_poly::MerminError;
use pauli_core::PauliError;
use thiserror::Error;

/// Errors from projection, decomposition, lifting, and vertex verification.
#[derive(Debug, Error)]
pub enum LiftError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Mermin(#[from] MerminError),
    #[error("expected a tableau of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("tableau entry at the identity must be 1")]
    NotNormalized,
    #[error("point violates row {row} of the projected classical system")]
    OutsideMpbar { row: usize },
    #[error("alpha has length {got}, expected {expected}")]
    AlphaLength { expected: usize, got: usize },
    #[error("alpha entries must be 0 or 1")]
    BadAlpha,
    #[error("no nonnegative combination of the tight projections reproduces the point")]
    Infeasible,
    #[error("tableau is not a vertex of the stabilizer polytope")]
    NotAVertex,
}
