use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("row {row} has length {got}, expected {expected}")]
    RowLength { row: usize, got: usize, expected: usize },
    #[error("row {0} is identically zero")]
    ZeroRow(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} exceeds the supported maximum {1}")]
    DimensionTooLarge(usize, usize),
    #[error("too many rows for tight-set tracking: {0} > {1}")]
    TooManyRows(usize, usize),
    #[error("point violates row {row}")]
    Infeasible { row: usize },
    #[error("rows do not span a pointed cone (rank {rank} < {dim})")]
    NotPointed { rank: usize, dim: usize },
    #[error("polyhedron is unbounded: extreme ray with x0 = 0")]
    Unbounded,
    #[error("invalid vertex representation: {0}")]
    InvalidVrep(String),
    #[error("invalid insertion order: {0}")]
    BadOrder(String),
}
