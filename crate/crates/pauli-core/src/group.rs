use crate::error::PauliError;
use crate::label::{PauliLabel, NONLOCAL_LABELS};
use crate::matrix::{conj_scaled, gate, match_signed_pauli, pauli_mat4, Gate};
use crate::tableau::{Tableau, LAMBDA_DIM, MERMIN_DIM, NONLOCAL_POSITIONS};
use once_cell::sync::Lazy;
use std::collections::{HashSet, VecDeque};

/// A symmetry of the label set: a permutation of the 16 labels with a sign
/// per label, induced by conjugation with a Clifford unitary. Always fixes
/// II with sign +1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    pub perm: [u8; 16],
    pub signs: [i8; 16],
}

impl SignedPermutation {
    pub fn identity() -> Self {
        let mut perm = [0u8; 16];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        SignedPermutation { perm, signs: [1; 16] }
    }

    /// self applied after other: (self * other)(a) = self(other(a)).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let mut perm = [0u8; 16];
        let mut signs = [1i8; 16];
        for i in 0..16 {
            let mid = other.perm[i] as usize;
            perm[i] = self.perm[mid];
            signs[i] = other.signs[i] * self.signs[mid];
        }
        SignedPermutation { perm, signs }
    }

    /// True when the permutation maps nonlocal labels to nonlocal labels.
    pub fn preserves_nonlocal(&self) -> bool {
        NONLOCAL_LABELS
            .iter()
            .all(|l| PauliLabel(self.perm[l.index()]).is_nonlocal())
    }
}

/// Derives the signed permutation of conjugation by a gate, checking that
/// every conjugated Pauli is exactly a signed Pauli.
pub fn derive_signed_permutation(g: &Gate) -> Result<SignedPermutation, PauliError> {
    let mut perm = [0u8; 16];
    let mut signs = [1i8; 16];
    for a in 0..16u8 {
        let t = pauli_mat4(PauliLabel(a));
        let conj = conj_scaled(g, &t).ok_or(PauliError::NoSignedPermutation)?;
        let (b, s) = match_signed_pauli(&conj)?;
        perm[a as usize] = b.0;
        signs[a as usize] = s;
    }
    if perm[0] != 0 || signs[0] != 1 {
        return Err(PauliError::NoSignedPermutation);
    }
    Ok(SignedPermutation { perm, signs })
}

/// Closure of a generating set under composition, by breadth-first search
/// from the identity.
pub fn group_generate(gens: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let mut seen: HashSet<SignedPermutation> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let id = SignedPermutation::identity();
    seen.insert(id);
    order.push(id);
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in gens {
            let h = gen.compose(&g);
            if seen.insert(h) {
                order.push(h);
                queue.push_back(h);
            }
        }
    }
    order
}

/// Applies a symmetry to a tableau. Full tableaux transform directly; the
/// 10-entry nonlocal form requires a symmetry preserving the nonlocal block.
pub fn apply_action(g: &SignedPermutation, t: &Tableau) -> Result<Tableau, PauliError> {
    match t.dim() {
        LAMBDA_DIM => {
            let mut out = Tableau::zeros(LAMBDA_DIM);
            for i in 0..LAMBDA_DIM {
                let j = g.perm[i] as usize;
                let mut v = t.0[i].clone();
                if g.signs[i] < 0 {
                    v = -v;
                }
                out.0[j] = v;
            }
            Ok(out)
        }
        MERMIN_DIM => {
            if !g.preserves_nonlocal() {
                return Err(PauliError::NotNonlocalPreserving);
            }
            let mut out = Tableau::zeros(MERMIN_DIM);
            out.0[0] = t.0[0].clone();
            for (k, &p16) in NONLOCAL_POSITIONS.iter().enumerate() {
                let q16 = g.perm[p16] as usize;
                let q = NONLOCAL_POSITIONS
                    .iter()
                    .position(|&x| x == q16)
                    .expect("nonlocal preserved");
                let mut v = t.0[1 + k].clone();
                if g.signs[p16] < 0 {
                    v = -v;
                }
                out.0[1 + q] = v;
            }
            Ok(out)
        }
        other => Err(PauliError::Dimension {
            expected: LAMBDA_DIM,
            got: other,
        }),
    }
}

/// Orbit of a tableau under a full group listing, sorted and deduplicated.
pub fn orbit(group: &[SignedPermutation], t: &Tableau) -> Result<Vec<Tableau>, PauliError> {
    let mut seen: HashSet<Tableau> = HashSet::new();
    for g in group {
        let u = apply_action(g, t)?;
        seen.insert(u);
    }
    let mut out: Vec<Tableau> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The local symmetry group: both single-qubit Clifford actions plus SWAP.
pub fn g_group() -> &'static Vec<SignedPermutation> {
    static G: Lazy<Vec<SignedPermutation>> = Lazy::new(|| {
        let gens: Vec<SignedPermutation> = ["H1", "H2", "S1", "S2", "SWAP"]
            .iter()
            .map(|n| derive_signed_permutation(&gate(n)).expect("Clifford generator"))
            .collect();
        group_generate(&gens)
    });
    &G
}

/// The full two-qubit Clifford action on labels (modulo phases).
pub fn cl2_group() -> &'static Vec<SignedPermutation> {
    static CL2: Lazy<Vec<SignedPermutation>> = Lazy::new(|| {
        let gens: Vec<SignedPermutation> = ["H1", "H2", "S1", "S2", "SWAP", "CZ"]
            .iter()
            .map(|n| derive_signed_permutation(&gate(n)).expect("Clifford generator"))
            .collect();
        group_generate(&gens)
    });
    &CL2
}
