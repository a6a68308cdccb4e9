//! Measurement-update rules for states over the two-qubit phase-point
//! operators.
//!
//! Projecting a deterministic vertex onto an eigenspace of a Pauli
//! observable either restricts it to the centralizer of the measured
//! label (local case) or splits it into two cnc-type branch operators
//! (nonlocal case); the annihilated nonlocal branch leaves a traceless
//! remainder that can recombine with a surviving partner of equal
//! weight. A dense conjugation oracle over Gaussian-rational matrices
//! cross-checks every symbolic update.

mod cnc;
mod error;
mod oracle;
mod perp;
mod update;

pub use cnc::CncOperator;
pub use error::UpdateError;
pub use oracle::oracle_conjugate;
pub use perp::{perp_decomposition, PerpDecomposition};
pub use update::{born_probability, update_deterministic, update_mixture, UpdateResult};
