//! The two-qubit Mermin polytope: its 120 vertices in closed form, the
//! CHSH facet family of the projected classical polytope, the duality
//! between apex vertices and CHSH facets, and combinatorial joint ranks
//! via signed graphs.

mod chsh;
mod cnc;
mod error;
mod neighbors;
mod vertex;

pub use chsh::{
    chsh_family, clbar_hpoly, mpbar_hpoly, nn_rows, pairing_value, phi_dual, phi_inverse,
    tight_vertices, ChshInequality,
};
pub use cnc::{apex_cnc, assignments, enumerate_cnc, CncSet};
pub use error::MerminError;
pub use neighbors::{
    joint_rank_signed_graph, neighbors, nonlocal_isotropics, SignedRankReport,
};
pub use vertex::{
    mp_hpoly, mp_vertices, vertex_index, vertex_v, vertex_v_prime, w_vertices, MerminVertex,
};

use exact_polytope::HPoly;
use once_cell::sync::Lazy;

/// Shared copies of the standard objects; construction is cheap but the
/// test suites hit them constantly.
pub static MP_HPOLY: Lazy<HPoly> = Lazy::new(mp_hpoly);
pub static MP_VERTICES: Lazy<Vec<MerminVertex>> = Lazy::new(mp_vertices);
pub static CHSH_FAMILY: Lazy<Vec<ChshInequality>> = Lazy::new(chsh_family);
pub static CLBAR_HPOLY: Lazy<HPoly> = Lazy::new(clbar_hpoly);
pub static MPBAR_HPOLY: Lazy<HPoly> = Lazy::new(mpbar_hpoly);
