//! Deterministic vertices of the classical polytope and their projections.

use crate::error::LiftError;
use num_traits::One;
use pauli_core::{
    omega, PauliLabel, Rat, Tableau, ALL_LABELS, LAMBDA_DIM, MERMIN_DIM, NONLOCAL_LABELS,
    NONLOCAL_POSITIONS,
};

/// One deterministic outcome assignment: a sign for every observable, built
/// from one outcome bit per single-qubit measurement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterministicVertex {
    /// Outcome bits (r, s) for X, Y, Z on the first and second qubit.
    pub outcomes: ([u8; 3], [u8; 3]),
    /// Induced exponent at each of the 16 labels, in canonical label order.
    /// Additive on local sums: xi(a+b) = xi(a) + xi(b) whenever a, b live on
    /// different qubits.
    pub xi: [u8; 16],
    /// Expectation table with entries (-1)^xi.
    pub tableau: Tableau,
}

impl DeterministicVertex {
    /// The exponent at one label.
    pub fn xi_at(&self, a: PauliLabel) -> u8 {
        self.xi[a.index()]
    }

    /// The companion vertex with every outcome bit flipped. Same nonlocal
    /// block, negated local block.
    pub fn antipode(&self) -> DeterministicVertex {
        let (r, s) = self.outcomes;
        det_vertex([1 - r[0], 1 - r[1], 1 - r[2]], [1 - s[0], 1 - s[1], 1 - s[2]])
    }
}

fn outcome_bit(bits: &[u8; 3], letter: u8) -> u8 {
    if letter == 0 {
        0
    } else {
        bits[(letter - 1) as usize]
    }
}

/// Builds the deterministic vertex for outcome bits r (first qubit) and
/// s (second qubit), each ordered X, Y, Z.
pub fn det_vertex(r: [u8; 3], s: [u8; 3]) -> DeterministicVertex {
    assert!(
        r.iter().chain(s.iter()).all(|&b| b < 2),
        "outcome bits must be 0 or 1"
    );
    let mut xi = [0u8; 16];
    let mut tableau = Tableau::zeros(LAMBDA_DIM);
    for (i, &label) in ALL_LABELS.iter().enumerate() {
        let (a1, a2) = label.letters();
        let e = outcome_bit(&r, a1) ^ outcome_bit(&s, a2);
        xi[i] = e;
        tableau.0[i] = if e == 0 { Rat::one() } else { -Rat::one() };
    }
    DeterministicVertex {
        outcomes: (r, s),
        xi,
        tableau,
    }
}

fn det_from_code(code: u8) -> DeterministicVertex {
    let b = |k: u8| (code >> (5 - k)) & 1;
    det_vertex([b(0), b(1), b(2)], [b(3), b(4), b(5)])
}

/// All 64 deterministic vertices, lexicographic in (r, s).
pub fn all_det_vertices() -> Vec<DeterministicVertex> {
    (0u8..64).map(det_from_code).collect()
}

/// Parity of xi on the nonlocal labels: 0 when xi is additive on every
/// commuting nonlocal pair, 1 when it is additive up to a constant flip.
/// Well defined for deterministic vertices; the sum of a commuting nonlocal
/// pair is again nonlocal.
pub fn parity(d: &DeterministicVertex) -> u8 {
    let mut shift = None;
    for (i, &a) in NONLOCAL_LABELS.iter().enumerate() {
        for &b in NONLOCAL_LABELS[i + 1..].iter() {
            if omega(a, b) != 0 {
                continue;
            }
            let t = d.xi_at(a.add(b)) ^ d.xi_at(a) ^ d.xi_at(b);
            match shift {
                None => shift = Some(t),
                Some(v) => assert_eq!(v, t, "xi parity must be uniform"),
            }
        }
    }
    shift.expect("commuting nonlocal pairs exist")
}

/// Drops the six local coordinates, keeping the identity entry and the nine
/// nonlocal entries in canonical order.
pub fn project(x: &Tableau) -> Result<Tableau, LiftError> {
    if x.dim() != LAMBDA_DIM {
        return Err(LiftError::Dimension {
            expected: LAMBDA_DIM,
            got: x.dim(),
        });
    }
    let mut out = Tableau::zeros(MERMIN_DIM);
    out.0[0] = x.0[0].clone();
    for (k, &p) in NONLOCAL_POSITIONS.iter().enumerate() {
        out.0[1 + k] = x.0[p].clone();
    }
    Ok(out)
}

/// A projected deterministic vertex: the common image of an antipodal pair.
#[derive(Debug, Clone)]
pub struct ProjectedDet {
    /// Ten coordinates: 1 at the identity, then the nine nonlocal signs.
    pub coords: Tableau,
    /// Parity of xi on the nonlocal labels, shared by both preimages.
    pub parity: u8,
    /// The two preimages in canonical order; alpha = 1 selects the first.
    /// The first has the smaller Hamming weight; at weight three the string
    /// whose leading bit is zero comes first.
    pub pair: (DeterministicVertex, DeterministicVertex),
}

/// All 32 projected deterministic vertices. Each covers one antipodal pair,
/// and the 32 coordinate vectors are distinct.
pub fn projected_dets() -> Vec<ProjectedDet> {
    (0u8..32)
        .map(|code| {
            let low = det_from_code(code);
            let high = det_from_code(63 ^ code);
            // code < 32 has leading bit zero, so it also wins weight ties.
            let pair = if code.count_ones() <= 3 {
                (low, high)
            } else {
                (high, low)
            };
            let coords = project(&pair.0.tableau).expect("deterministic tableau");
            let shared_parity = parity(&pair.0);
            debug_assert_eq!(shared_parity, parity(&pair.1));
            debug_assert_eq!(coords, project(&pair.1.tableau).expect("same block"));
            ProjectedDet {
                coords,
                parity: shared_parity,
                pair,
            }
        })
        .collect()
}
