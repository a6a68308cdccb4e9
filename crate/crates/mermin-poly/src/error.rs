use thiserror::Error;

#[derive(Error, Debug)]
pub enum MerminError {
    #[error(transparent)]
    Pauli(#[from] pauli_core::PauliError),
    #[error(transparent)]
    Poly(#[from] exact_polytope::PolyError),
    #[error("assignment domain does not match the cnc set: {0}")]
    BadDomain(String),
    #[error("assignment violates the sign closure rule")]
    BadGamma,
    #[error("boundary assignment must have odd parity")]
    BadParity,
    #[error("operation needs an apex-type vertex")]
    NotApexType,
    #[error("joint rank of a point with itself is the tight rank, not a pair rank")]
    SamePoint,
    #[error("triangle {triangle} has {dets} deterministic edges but {tights} tight rows")]
    TriangleCensus {
        triangle: usize,
        dets: usize,
        tights: usize,
    },
}
