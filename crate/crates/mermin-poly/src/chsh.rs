use crate::cnc::{enumerate_cnc, CncSet};
use crate::error::MerminError;
use crate::vertex::MerminVertex;
use exact_polytope::HPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use pauli_core::{beta, OutcomeFunction, PauliLabel, MERMIN_DIM, NONLOCAL_LABELS};

/// A CHSH facet of the projected classical polytope, carried by the
/// boundary of an apex cnc set: 2 + sum (-1)^gamma(b) x_b >= 0 with the
/// boundary assignment gamma of odd parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChshInequality {
    pub cnc: CncSet,
    pub gamma: OutcomeFunction,
    pub row: Vec<BigInt>,
}

impl ChshInequality {
    pub fn new(cnc: CncSet, gamma: OutcomeFunction) -> Result<Self, MerminError> {
        let boundary = cnc.boundary();
        if cnc.is_triple() {
            return Err(MerminError::NotApexType);
        }
        let mut domain: Vec<PauliLabel> = gamma.domain().filter(|l| !l.is_identity()).collect();
        domain.sort();
        if domain != boundary {
            return Err(MerminError::BadDomain(format!(
                "gamma defined on {domain:?}, boundary is {boundary:?}"
            )));
        }
        let parity: u8 = boundary.iter().map(|&b| gamma.get(b).unwrap()).sum::<u8>() & 1;
        if parity != 1 {
            return Err(MerminError::BadParity);
        }
        let mut row = vec![BigInt::zero(); MERMIN_DIM];
        row[0] = BigInt::from(2);
        for &b in &boundary {
            let pos = NONLOCAL_LABELS.iter().position(|&l| l == b).unwrap();
            row[1 + pos] = BigInt::from(gamma.sign(b).unwrap());
        }
        Ok(ChshInequality { cnc, gamma, row })
    }

    pub fn apex(&self) -> PauliLabel {
        match &self.cnc {
            CncSet::ApexPair { apex, .. } => *apex,
            CncSet::Triple { .. } => unreachable!("construction rejects triples"),
        }
    }
}

/// All 72 CHSH inequalities: apexes in label order, the four boundary sign
/// bits running as a big-endian counter filtered to odd parity.
pub fn chsh_family() -> Vec<ChshInequality> {
    let mut out = Vec::with_capacity(72);
    for cnc in enumerate_cnc().into_iter().filter(|c| !c.is_triple()) {
        let boundary = cnc.boundary();
        for bits in 0..16u8 {
            if bits.count_ones() % 2 != 1 {
                continue;
            }
            let pairs: Vec<(PauliLabel, u8)> = boundary
                .iter()
                .enumerate()
                .map(|(i, &b)| (b, (bits >> (3 - i)) & 1))
                .collect();
            let gamma = OutcomeFunction::from_pairs(&pairs).expect("fresh labels");
            out.push(ChshInequality::new(cnc.clone(), gamma).expect("odd parity"));
        }
    }
    out
}

/// Exact value of a CHSH row at a vertex.
pub fn pairing_value(h: &ChshInequality, v: &MerminVertex) -> BigRational {
    v.coords.dot_row(&h.row)
}

/// The apex vertex dual to a CHSH inequality: extend gamma to the apex by
/// the closure rule, then flip every boundary sign.
pub fn phi_dual(h: &ChshInequality) -> MerminVertex {
    let CncSet::ApexPair { apex, isos } = &h.cnc else {
        unreachable!("construction rejects triples")
    };
    let mut ext = Vec::new();
    for iso in isos {
        let rest: Vec<PauliLabel> = iso
            .nonzero()
            .iter()
            .copied()
            .filter(|&l| l != *apex)
            .collect();
        let (b, c) = (rest[0], rest[1]);
        let v = (h.gamma.get(b).unwrap() + h.gamma.get(c).unwrap()
            + beta(b, c).expect("isotropic pair"))
            & 1;
        ext.push(v);
    }
    assert_eq!(ext[0], ext[1], "both isotropics extend gamma the same way");
    let mut pairs: Vec<(PauliLabel, u8)> = h
        .cnc
        .boundary()
        .iter()
        .map(|&b| (b, (h.gamma.get(b).unwrap() + 1) & 1))
        .collect();
    pairs.push((*apex, ext[0]));
    let gamma = OutcomeFunction::from_pairs(&pairs).unwrap();
    MerminVertex::new(h.cnc.clone(), gamma).expect("dual assignment is closed")
}

/// The CHSH inequality dual to an apex vertex; triples have no dual facet.
pub fn phi_inverse(v: &MerminVertex) -> Result<ChshInequality, MerminError> {
    if v.is_type1() {
        return Err(MerminError::NotApexType);
    }
    let pairs: Vec<(PauliLabel, u8)> = v
        .cnc
        .boundary()
        .iter()
        .map(|&b| (b, (v.gamma.get(b).unwrap() + 1) & 1))
        .collect();
    let gamma = OutcomeFunction::from_pairs(&pairs).unwrap();
    ChshInequality::new(v.cnc.clone(), gamma)
}

/// Indices of the vertices tight at h, in mp_vertices order.
pub fn tight_vertices(h: &ChshInequality, verts: &[MerminVertex]) -> Vec<usize> {
    verts
        .iter()
        .enumerate()
        .filter(|(_, v)| pairing_value(h, v).is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// The 18 box rows: for each nonlocal label in order, 1 + x_a >= 0 then
/// 1 - x_a >= 0.
pub fn nn_rows() -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(18);
    for pos in 0..9 {
        for sign in [1i64, -1] {
            let mut row = vec![BigInt::zero(); MERMIN_DIM];
            row[0] = BigInt::from(1);
            row[1 + pos] = BigInt::from(sign);
            out.push(row);
        }
    }
    out
}

/// The projected classical polytope: 18 box rows then 72 CHSH rows.
pub fn clbar_hpoly() -> HPoly {
    let mut rows = nn_rows();
    rows.extend(chsh_family().into_iter().map(|h| h.row));
    assert_eq!(rows.len(), 90);
    HPoly::new(MERMIN_DIM, rows).expect("well-formed rows")
}

/// The intersection target: 24 stabilizer rows, 18 box rows, 72 CHSH rows.
pub fn mpbar_hpoly() -> HPoly {
    let mp = crate::vertex::mp_hpoly();
    let mut rows: Vec<Vec<BigInt>> = mp.rows().to_vec();
    rows.extend(nn_rows());
    rows.extend(chsh_family().into_iter().map(|h| h.row));
    assert_eq!(rows.len(), 114);
    HPoly::new(MERMIN_DIM, rows).expect("well-formed rows")
}
