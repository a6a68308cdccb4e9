//! Exact rational polyhedra in homogeneous form.
//!
//! A polytope is a list of integer rows h with the convention h . x >= 0 on
//! homogenized points x = (x0, x1, ..., x_{d-1}), x0 > 0 for finite points.
//! Everything is computed in exact integer or rational arithmetic: tight
//! sets, matrix ranks by fraction-free elimination, and vertex enumeration
//! by the double description method.

mod dd;
mod error;
mod hpoly;
mod rank;

pub use dd::{dd_step, enumerate_vertices, enumerate_vertices_with_order, DdPair, DdRay};
pub use error::PolyError;
pub use hpoly::{intersect, joint_rank, tight_rank, tight_set, HPoly, TightSet};
pub use rank::{clear_denominators, exact_rank, exact_rank_rat, reduce_by_gcd, rref_rat};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// Hard cap on matrix width used by the fixed-size fast paths.
pub(crate) const MAX_DIM: usize = 16;
/// Hard cap on the number of rows trackable in a tight-set bitmask.
pub(crate) const MAX_ROWS: usize = 128;
