use crate::cnc::{apex_cnc, assignments, enumerate_cnc, CncSet};
use crate::error::MerminError;
use exact_polytope::HPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use pauli_core::{
    enumerate_stabilizer_groups, OutcomeFunction, PauliLabel, Tableau, MERMIN_DIM,
};

/// A vertex of the Mermin polytope: a maximal cnc set with an outcome
/// assignment, realized as the homogenized tableau [1 | nonlocal block]
/// with (-1)^gamma on the set and 0 elsewhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MerminVertex {
    pub cnc: CncSet,
    pub gamma: OutcomeFunction,
    pub coords: Tableau,
}

impl MerminVertex {
    pub fn new(cnc: CncSet, gamma: OutcomeFunction) -> Result<Self, MerminError> {
        let omega = cnc.omega_nonzero();
        let mut domain: Vec<PauliLabel> = gamma.domain().filter(|l| !l.is_identity()).collect();
        domain.sort();
        if domain != omega {
            return Err(MerminError::BadDomain(format!(
                "gamma defined on {domain:?}, cnc set is {omega:?}"
            )));
        }
        if !gamma.is_valid() {
            return Err(MerminError::BadGamma);
        }
        let mut coords = Tableau::zeros(MERMIN_DIM);
        coords.0[0] = BigRational::from_integer(BigInt::from(1));
        for &a in &omega {
            let s = gamma.sign(a).unwrap();
            coords.set_nonlocal(a, BigRational::from_integer(BigInt::from(s)));
        }
        Ok(MerminVertex { cnc, gamma, coords })
    }

    /// True for the triple (type 1) family.
    pub fn is_type1(&self) -> bool {
        self.cnc.is_triple()
    }

    /// True for the apex (type 2) family.
    pub fn is_type2(&self) -> bool {
        !self.cnc.is_triple()
    }
}

/// All 120 vertices: 48 triple vertices then 72 apex vertices, cnc sets in
/// enumeration order, assignments in counter order.
pub fn mp_vertices() -> Vec<MerminVertex> {
    let mut out = Vec::with_capacity(120);
    for cnc in enumerate_cnc() {
        for gamma in assignments(&cnc) {
            out.push(MerminVertex::new(cnc.clone(), gamma).expect("valid by construction"));
        }
    }
    out
}

/// The 24-row H-description of the Mermin polytope: one row per nonlocal
/// stabilizer group, isotropics sorted, sign bits in counter order.
pub fn mp_hpoly() -> HPoly {
    let rows: Vec<Vec<BigInt>> = enumerate_stabilizer_groups()
        .iter()
        .filter(|g| g.iso.is_nonlocal())
        .map(|g| g.row_10().expect("nonlocal group"))
        .collect();
    assert_eq!(rows.len(), 24);
    HPoly::new(MERMIN_DIM, rows).expect("well-formed stabilizer rows")
}

fn lab(s: &str) -> PauliLabel {
    s.parse().expect("two-letter Pauli label")
}

fn apex_vertex(apex: &str, pairs: &[(&str, u8)]) -> MerminVertex {
    let cnc = apex_cnc(lab(apex)).unwrap();
    let gamma: Vec<(PauliLabel, u8)> = pairs.iter().map(|&(s, v)| (lab(s), v)).collect();
    let gamma = OutcomeFunction::from_pairs(&gamma).unwrap();
    MerminVertex::new(cnc, gamma).expect("fixture is a valid vertex")
}

/// The canonical apex vertex used throughout: apex ZZ, single minus sign
/// at YY.
pub fn vertex_v() -> MerminVertex {
    apex_vertex(
        "ZZ",
        &[("XX", 0), ("XY", 0), ("YX", 0), ("YY", 1), ("ZZ", 0)],
    )
}

/// An apex-XX vertex adjacent to the canonical one.
pub fn vertex_v_prime() -> MerminVertex {
    apex_vertex(
        "XX",
        &[("XX", 0), ("YY", 1), ("YZ", 1), ("ZY", 1), ("ZZ", 0)],
    )
}

/// The four standard non-neighbors of the canonical vertex: apex YZ, apex
/// ZZ, the column-Y triple, and apex XY.
pub fn w_vertices() -> [MerminVertex; 4] {
    let w0 = apex_vertex(
        "YZ",
        &[("XX", 0), ("XY", 1), ("YZ", 1), ("ZX", 1), ("ZY", 1)],
    );
    let w1 = apex_vertex(
        "ZZ",
        &[("XX", 0), ("XY", 1), ("YX", 1), ("YY", 1), ("ZZ", 0)],
    );
    let elements = [lab("XY"), lab("YY"), lab("ZY")];
    let gamma = OutcomeFunction::from_pairs(&[(lab("XY"), 1), (lab("YY"), 1), (lab("ZY"), 1)])
        .unwrap();
    let w2 = MerminVertex::new(CncSet::Triple { elements }, gamma).unwrap();
    let w3 = apex_vertex(
        "XY",
        &[("XY", 1), ("YX", 1), ("YZ", 1), ("ZX", 1), ("ZZ", 0)],
    );
    [w0, w1, w2, w3]
}

/// Index of a vertex in the mp_vertices ordering, by coordinates.
pub fn vertex_index(verts: &[MerminVertex], v: &MerminVertex) -> Option<usize> {
    verts.iter().position(|u| u.coords == v.coords)
}
