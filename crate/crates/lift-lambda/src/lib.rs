//! Deterministic vertices, convex decompositions, and classical lifts into
//! the two-qubit stabilizer polytope.
//!
//! The pipeline: decompose a crossing vertex of the projected intersection
//! polytope as a convex combination of projected deterministic vertices,
//! then search the binary hypercube of preimage selections for lifts that
//! land on vertices of the 60-row stabilizer system. Everything is exact.

mod decompose;
mod det;
mod error;
mod lambda;
mod lift;

pub use decompose::{solve_decomposition, tight_dets, tight_facets_ui, Decomposition, TightFacets};
pub use det::{
    all_det_vertices, det_vertex, parity, project, projected_dets, DeterministicVertex,
    ProjectedDet,
};
pub use error::LiftError;
pub use lambda::{
    cl2_orbit_type, lambda_hpoly, local_hpoly, type_fixtures, verify_lambda_vertex,
    LambdaVertexReport, VertexType,
};
pub use lift::{classical_lift, search_lifts};
