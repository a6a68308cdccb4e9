use crate::error::PauliError;
use crate::label::{omega, PauliLabel, NONLOCAL_LABELS};
use crate::sign::{beta, OutcomeFunction};
use crate::tableau::{Rat, Tableau, LAMBDA_DIM, MERMIN_DIM};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// A maximal isotropic subspace: II plus three pairwise commuting nonzero
/// labels closed under addition. Elements are kept sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IsotropicSubspace {
    pub elements: [PauliLabel; 4],
}

impl IsotropicSubspace {
    pub fn nonzero(&self) -> [PauliLabel; 3] {
        [self.elements[1], self.elements[2], self.elements[3]]
    }

    /// True when all three nonzero elements are nonlocal.
    pub fn is_nonlocal(&self) -> bool {
        self.nonzero().iter().all(|l| l.is_nonlocal())
    }

    pub fn contains(&self, a: PauliLabel) -> bool {
        self.elements.contains(&a)
    }

    /// The two smallest nonzero elements generate; their sum is the third.
    pub fn generators(&self) -> (PauliLabel, PauliLabel) {
        (self.elements[1], self.elements[2])
    }
}

/// All 15 maximal isotropic subspaces, sorted by element list.
pub fn enumerate_isotropics() -> Vec<IsotropicSubspace> {
    let mut seen = BTreeSet::new();
    for a in 1..16u8 {
        for b in (a + 1)..16u8 {
            let (la, lb) = (PauliLabel(a), PauliLabel(b));
            if omega(la, lb) != 0 {
                continue;
            }
            let lc = la.add(lb);
            if lc == la || lc == lb || lc.is_identity() {
                continue;
            }
            let mut elems = [PauliLabel::IDENTITY, la, lb, lc];
            elems.sort();
            seen.insert(elems);
        }
    }
    seen.into_iter()
        .map(|elements| IsotropicSubspace { elements })
        .collect()
}

/// A stabilizer group: a maximal isotropic together with a consistent sign
/// assignment gamma. The projector row is 1 at II and (-1)^gamma(a) at the
/// three nonzero elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizerGroup {
    pub iso: IsotropicSubspace,
    pub gamma: OutcomeFunction,
}

impl StabilizerGroup {
    /// Homogeneous facet row over all 16 labels; row . x >= 0 on Lambda.
    pub fn row_16(&self) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); LAMBDA_DIM];
        for &a in self.iso.elements.iter() {
            let s = self.gamma.sign(a).expect("gamma total on the subspace");
            row[a.index()] = BigInt::from(s);
        }
        row
    }

    /// Homogeneous row over [x0 | nonlocal block]; only valid for nonlocal groups.
    pub fn row_10(&self) -> Result<Vec<BigInt>, PauliError> {
        if !self.iso.is_nonlocal() {
            return Err(PauliError::NotNonlocalPreserving);
        }
        let mut row = vec![BigInt::zero(); MERMIN_DIM];
        row[0] = BigInt::one();
        for &a in self.iso.nonzero().iter() {
            let pos = NONLOCAL_LABELS.iter().position(|&l| l == a).unwrap();
            let s = self.gamma.sign(a).unwrap();
            row[1 + pos] = BigInt::from(s);
        }
        Ok(row)
    }

    /// Expectation tableau of the pure stabilizer state projecting onto this
    /// group: (-1)^gamma on the subspace, 0 elsewhere.
    pub fn state_tableau(&self) -> Tableau {
        let mut t = Tableau::zeros(LAMBDA_DIM);
        for &a in self.iso.elements.iter() {
            let s = self.gamma.sign(a).unwrap();
            t.set(a, Rat::from_integer(BigInt::from(s)));
        }
        t
    }
}

/// All 60 stabilizer groups: 15 isotropics times 4 sign choices. Groups are
/// ordered by subspace, then by the sign bits on the two generators in the
/// order (0,0), (0,1), (1,0), (1,1).
pub fn enumerate_stabilizer_groups() -> Vec<StabilizerGroup> {
    let mut out = Vec::with_capacity(60);
    for iso in enumerate_isotropics() {
        let (g1, g2) = iso.generators();
        let g3 = g1.add(g2);
        let b = beta(g1, g2).expect("generators commute");
        for bits in 0..4u8 {
            let e1 = (bits >> 1) & 1;
            let e2 = bits & 1;
            let gamma = OutcomeFunction::from_pairs(&[
                (g1, e1),
                (g2, e2),
                (g3, (e1 + e2 + b) & 1),
            ])
            .expect("consistent by construction");
            out.push(StabilizerGroup { iso, gamma });
        }
    }
    out
}
