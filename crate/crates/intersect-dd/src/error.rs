use thiserror::Error;

#[derive(Error, Debug)]
pub enum IntersectError {
    #[error(transparent)]
    Pauli(#[from] pauli_core::PauliError),
    #[error(transparent)]
    Poly(#[from] exact_polytope::PolyError),
    #[error(transparent)]
    Mermin(#[from] mermin_poly::MerminError),
    #[error("w must satisfy the cutting inequality, got h.w = {0}")]
    WrongSideW(String),
    #[error("v must not satisfy the cutting inequality strictly, got h.v = {0}")]
    WrongSideV(String),
    #[error("setup is inconsistent: {0}")]
    BadSetup(String),
}
