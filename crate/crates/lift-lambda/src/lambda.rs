//! The two-qubit stabilizer polytope: feasibility, vertex tests, orbit labels.

use crate::error::LiftError;
use exact_polytope::{exact_rank, HPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use pauli_core::{cl2_group, enumerate_stabilizer_groups, orbit, Rat, Tableau, LAMBDA_DIM};
use std::collections::HashSet;
use std::fmt;

static LAMBDA: Lazy<HPoly> = Lazy::new(|| {
    let rows: Vec<Vec<BigInt>> = enumerate_stabilizer_groups()
        .iter()
        .map(|g| g.row_16())
        .collect();
    assert_eq!(rows.len(), 60);
    HPoly::new(LAMBDA_DIM, rows).expect("stabilizer rows")
});

/// H-description of the stabilizer polytope: 60 rows, one per stabilizer
/// state, each of the form 1 + sum of signed entries over an isotropic.
pub fn lambda_hpoly() -> &'static HPoly {
    &LAMBDA
}

static LOCAL: Lazy<HPoly> = Lazy::new(|| {
    let rows: Vec<Vec<BigInt>> = enumerate_stabilizer_groups()
        .iter()
        .filter(|g| !g.iso.is_nonlocal())
        .map(|g| g.row_16())
        .collect();
    assert_eq!(rows.len(), 36);
    HPoly::new(LAMBDA_DIM, rows).expect("local rows")
});

/// The local subsystem: the 36 rows whose isotropic contains local labels.
/// Valid for the classical polytope as well.
pub fn local_hpoly() -> &'static HPoly {
    &LOCAL
}

/// Orbit label of a polytope vertex under the two-qubit Clifford action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    Other,
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VertexType::T1 => "T1",
            VertexType::T2 => "T2",
            VertexType::T3 => "T3",
            VertexType::T4 => "T4",
            VertexType::T5 => "T5",
            VertexType::T6 => "T6",
            VertexType::T7 => "T7",
            VertexType::T8 => "T8",
            VertexType::Other => "other",
        };
        f.write_str(name)
    }
}

fn rat_tab(nums: [i64; 16], den: i64) -> Tableau {
    Tableau(
        nums.iter()
            .map(|&n| Rat::new(BigInt::from(n), BigInt::from(den)))
            .collect(),
    )
}

/// One representative vertex tableau per orbit type, in canonical label
/// order II, IX, IY, IZ, XI, XX, XY, XZ, YI, YX, YY, YZ, ZI, ZX, ZY, ZZ.
pub fn type_fixtures() -> [(VertexType, Tableau); 8] {
    [
        (
            VertexType::T1,
            rat_tab([1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0], 1),
        ),
        (
            VertexType::T2,
            rat_tab([1, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, 1, 0, 0, 1], 1),
        ),
        (
            VertexType::T3,
            rat_tab([2, -1, -1, 1, -1, 2, 0, 0, 0, 1, -1, -1, 2, -1, -1, 1], 2),
        ),
        (
            VertexType::T4,
            rat_tab([2, 1, -1, 1, 0, 1, 1, 1, -1, 0, 0, 0, 0, 1, 1, 1], 2),
        ),
        (
            VertexType::T5,
            rat_tab([2, -1, -1, -1, -1, 2, 0, 0, 1, 0, -2, 0, -1, 0, 0, 2], 2),
        ),
        (
            VertexType::T6,
            rat_tab([2, -2, 1, 1, -1, 1, 0, 0, -1, 1, -2, 0, 0, 0, -1, 1], 2),
        ),
        (
            VertexType::T7,
            rat_tab([3, -2, 1, 2, -1, 2, 1, 0, -2, 1, -2, -1, 2, -1, 0, 3], 3),
        ),
        (
            VertexType::T8,
            rat_tab([4, 3, 2, 2, 3, 2, 3, 1, 1, 2, -1, -1, 3, 2, 1, 3], 4),
        ),
    ]
}

static TYPE_ORBITS: Lazy<Vec<(VertexType, HashSet<Tableau>)>> = Lazy::new(|| {
    type_fixtures()
        .into_iter()
        .map(|(ty, rep)| {
            let orb = orbit(cl2_group(), &rep).expect("16-entry fixtures");
            (ty, orb.into_iter().collect())
        })
        .collect()
});

fn orbit_lookup(x: &Tableau) -> VertexType {
    for (ty, members) in TYPE_ORBITS.iter() {
        if members.contains(x) {
            return *ty;
        }
    }
    VertexType::Other
}

/// Verification record for one tableau against the 60-row system.
#[derive(Debug, Clone)]
pub struct LambdaVertexReport {
    /// The verified tableau.
    pub tableau: Tableau,
    /// All 60 rows nonnegative.
    pub feasible: bool,
    /// Number of rows met with equality.
    pub tight_count: usize,
    /// Rank of the tight rows; 15 pins the point up to scale.
    pub tight_rank: usize,
    /// Feasible with tight rank 15.
    pub is_vertex: bool,
    /// Vertex with more than 15 tight rows.
    pub degenerate: bool,
    /// Clifford orbit label when the tableau is a vertex of a known type.
    pub orbit_type: VertexType,
}

/// Checks a normalized tableau against the 60-row system and classifies it.
pub fn verify_lambda_vertex(x: &Tableau) -> Result<LambdaVertexReport, LiftError> {
    if x.dim() != LAMBDA_DIM {
        return Err(LiftError::Dimension {
            expected: LAMBDA_DIM,
            got: x.dim(),
        });
    }
    if !x.0[0].is_one() {
        return Err(LiftError::NotNormalized);
    }
    let p = lambda_hpoly();
    let mut feasible = true;
    let mut tight_rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..p.nrows() {
        let v = p.value(i, &x.0);
        if v.is_zero() {
            tight_rows.push(p.row(i).to_vec());
        } else if v.is_negative() {
            feasible = false;
        }
    }
    let tight_count = tight_rows.len();
    let tight_rank = exact_rank(&tight_rows);
    let is_vertex = feasible && tight_rank == LAMBDA_DIM - 1;
    let degenerate = is_vertex && tight_count > LAMBDA_DIM - 1;
    let orbit_type = if is_vertex {
        orbit_lookup(x)
    } else {
        VertexType::Other
    };
    Ok(LambdaVertexReport {
        tableau: x.clone(),
        feasible,
        tight_count,
        tight_rank,
        is_vertex,
        degenerate,
        orbit_type,
    })
}

/// Orbit label of a verified vertex. Rejects tableaux that are not vertices.
pub fn cl2_orbit_type(x: &Tableau) -> Result<VertexType, LiftError> {
    let report = verify_lambda_vertex(x)?;
    if !report.is_vertex {
        return Err(LiftError::NotAVertex);
    }
    Ok(report.orbit_type)
}
