//! Two-qubit Pauli algebra over the symplectic space Z2^2 x Z2^2.
//!
//! Labels carry no phase. The sign function beta tracks the real sign picked
//! up when two commuting Pauli operators are multiplied, and is the backbone
//! of every stabilizer sign computation downstream. Symmetries act as signed
//! permutations of the 16 labels, derived from exact matrix conjugation.

mod error;
mod group;
mod isotropic;
mod label;
mod matrix;
mod sign;
mod tableau;

pub use error::PauliError;
pub use group::{
    apply_action, cl2_group, derive_signed_permutation, g_group, group_generate, orbit,
    SignedPermutation,
};
pub use isotropic::{
    enumerate_isotropics, enumerate_stabilizer_groups, IsotropicSubspace, StabilizerGroup,
};
pub use label::{omega, PauliLabel, ALL_LABELS, NONLOCAL_LABELS};
pub use matrix::{conj_scaled, gate, pauli_mat4, Gate, Mat4};
pub use sign::{beta, OutcomeFunction};
pub use tableau::{Rat, Tableau, LAMBDA_DIM, MERMIN_DIM, NONLOCAL_POSITIONS};
