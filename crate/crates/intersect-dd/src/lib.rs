//! The streamlined double description step for the intersection of the
//! Mermin polytope with the projected classical polytope: hypothesis
//! checks, the crossing-point construction recovering the four new vertex
//! families, and the orbit census of the full intersection.

mod error;
mod orbits;
mod setup;
mod streamline;

pub use error::IntersectError;
pub use orbits::{
    canonical_streamlined, classify_mpbar_orbits, mpbar_vertices, mpbar_vertices_with_seed,
    OrbitClass, OrbitTable,
};
pub use setup::{intersection_setup, verify_conditions, ConditionReport, IntersectionSetup};
pub use streamline::{
    joint_tight_rows, matrix_tight, reconstruct_ui, streamlined_candidates, streamlined_vertex,
    tight_chsh_pairs, RankCertificate, ReconstructedVertex, StreamlinedVertex,
};

use once_cell::sync::Lazy;
use pauli_core::Tableau;

/// The full intersection vertex list, shared because the enumeration is
/// the expensive step every consumer needs.
pub static MPBAR_VERTICES: Lazy<Vec<Tableau>> =
    Lazy::new(|| mpbar_vertices().expect("intersection enumeration"));
