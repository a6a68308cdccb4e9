//! Tight facets at crossing vertices and exact convex decompositions.

use crate::det::{projected_dets, ProjectedDet};
use crate::error::LiftError;
use exact_polytope::{clear_denominators, enumerate_vertices, HPoly};
use mermin_poly::{chsh_family, mpbar_hpoly, nn_rows, ChshInequality};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use pauli_core::{Rat, Tableau, MERMIN_DIM};

/// The box walls and CHSH rows tight at a point of the projected polytope.
#[derive(Debug, Clone)]
pub struct TightFacets {
    /// Tight box rows, each of the form [1 | +-e_a].
    pub nn: Vec<Vec<BigInt>>,
    /// Tight CHSH inequalities.
    pub chsh: Vec<ChshInequality>,
}

impl TightFacets {
    /// All tight rows in one list, box rows first.
    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = self.nn.clone();
        out.extend(self.chsh.iter().map(|h| h.row.clone()));
        out
    }

    /// Number of tight rows.
    pub fn len(&self) -> usize {
        self.nn.len() + self.chsh.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Collects the box and CHSH rows tight at u. The point must satisfy the
/// full projected system: stabilizer, box, and CHSH rows.
pub fn tight_facets_ui(u: &Tableau) -> Result<TightFacets, LiftError> {
    if u.dim() != MERMIN_DIM {
        return Err(LiftError::Dimension {
            expected: MERMIN_DIM,
            got: u.dim(),
        });
    }
    if !u.0[0].is_one() {
        return Err(LiftError::NotNormalized);
    }
    let mpbar = mpbar_hpoly();
    for i in 0..mpbar.nrows() {
        if mpbar.value(i, &u.0).is_negative() {
            return Err(LiftError::OutsideMpbar { row: i });
        }
    }
    let nn = nn_rows()
        .into_iter()
        .filter(|row| u.dot_row(row).is_zero())
        .collect();
    let chsh = chsh_family()
        .into_iter()
        .filter(|h| u.dot_row(&h.row).is_zero())
        .collect();
    Ok(TightFacets { nn, chsh })
}

/// The projected deterministic vertices lying on every facet tight at u:
/// the columns of the decomposition system.
pub fn tight_dets(u: &Tableau) -> Result<Vec<ProjectedDet>, LiftError> {
    let rows = tight_facets_ui(u)?.rows();
    Ok(projected_dets()
        .into_iter()
        .filter(|d| rows.iter().all(|row| d.coords.dot_row(row).is_zero()))
        .collect())
}

/// One basic feasible solution of u = R q with q >= 0, restricted to its
/// positive support.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// The decomposed point.
    pub target: Tableau,
    /// Columns carrying positive weight, in canonical projection order.
    pub support: Vec<ProjectedDet>,
    /// Matching weights; positive and summing to one.
    pub q: Vec<Rat>,
    /// True when this is the only basic feasible solution.
    pub unique: bool,
}

/// Enumerates every basic feasible solution of the decomposition system
/// over the tight projected deterministic vertices.
pub fn solve_decomposition(u: &Tableau) -> Result<Vec<Decomposition>, LiftError> {
    let dets = tight_dets(u)?;
    let k = dets.len();
    if k == 0 {
        return Err(LiftError::Infeasible);
    }
    // Homogeneous cone over the solution polytope: coordinate 0 scales u,
    // the rest are the weights. The identity row of R forces the weights to
    // sum to the scale, so the cone is pointed and the polytope bounded.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(k + 2 * MERMIN_DIM);
    for i in 0..k {
        let mut row = vec![BigInt::zero(); k + 1];
        row[1 + i] = BigInt::one();
        rows.push(row);
    }
    for j in 0..MERMIN_DIM {
        let mut rat_row: Vec<Rat> = Vec::with_capacity(k + 1);
        rat_row.push(-u.0[j].clone());
        for d in &dets {
            rat_row.push(d.coords.0[j].clone());
        }
        let row = clear_denominators(&rat_row);
        rows.push(row.iter().map(|c| -c).collect());
        rows.push(row);
    }
    let p = HPoly::new(k + 1, rows)?;
    let mut solutions = enumerate_vertices(&p)?;
    if solutions.is_empty() {
        return Err(LiftError::Infeasible);
    }
    solutions.sort();
    let n = solutions.len();
    Ok(solutions
        .into_iter()
        .map(|sol| {
            let mut support = Vec::new();
            let mut q = Vec::new();
            for (d, w) in dets.iter().zip(&sol[1..]) {
                if !w.is_zero() {
                    support.push(d.clone());
                    q.push(w.clone());
                }
            }
            Decomposition {
                target: u.clone(),
                support,
                q,
                unique: n == 1,
            }
        })
        .collect())
}
