use crate::error::UpdateError;
use pauli_core::{beta, omega, PauliLabel, ALL_LABELS};

/// The centralizer of a nonidentity label a, organized as the three
/// maximal isotropic subspaces through a. Each coset of <a> inside the
/// centralizer is named by its lexicographically smallest element; for
/// nonlocal a the local coset is c and the two nonlocal cosets are c1
/// and c2 with c1 < c2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerpDecomposition {
    pub a: PauliLabel,
    pub c: PauliLabel,
    pub c1: PauliLabel,
    pub c2: PauliLabel,
}

impl PerpDecomposition {
    /// The three subspaces <a,c>, <a,c1>, <a,c2>, each sorted.
    pub fn subspaces(&self) -> [[PauliLabel; 4]; 3] {
        [self.span(self.c), self.span(self.c1), self.span(self.c2)]
    }

    fn span(&self, g: PauliLabel) -> [PauliLabel; 4] {
        let mut s = [PauliLabel::IDENTITY, self.a, g, self.a.add(g)];
        s.sort();
        s
    }

    /// The full centralizer <a>^perp as a sorted 8-element list.
    pub fn perp(&self) -> Vec<PauliLabel> {
        let mut out: Vec<PauliLabel> = self
            .subspaces()
            .iter()
            .flatten()
            .copied()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Renames the nonlocal generators so that beta(a, first) = t.
    /// The two nonlocal cosets carry opposite beta, so exactly one
    /// orientation exists for either parity.
    pub fn oriented(&self, t: u8) -> Result<(PauliLabel, PauliLabel), UpdateError> {
        if beta(self.a, self.c1)? == (t & 1) {
            Ok((self.c1, self.c2))
        } else if beta(self.a, self.c2)? == (t & 1) {
            Ok((self.c2, self.c1))
        } else {
            Err(UpdateError::NoOrientation)
        }
    }
}

/// Splits <a>^perp into <a,c>, <a,c1>, <a,c2>. Rejects the identity.
pub fn perp_decomposition(a: PauliLabel) -> Result<PerpDecomposition, UpdateError> {
    if a.is_identity() {
        return Err(UpdateError::IdentityMeasurement);
    }
    let mut reps: Vec<PauliLabel> = Vec::new();
    for &b in ALL_LABELS.iter() {
        if b.is_identity() || b == a || omega(a, b) != 0 {
            continue;
        }
        if b < a.add(b) {
            reps.push(b);
        }
    }
    debug_assert_eq!(reps.len(), 3);
    reps.sort();
    if a.is_nonlocal() {
        // Exactly one coset consists of local labels; it becomes c. Its
        // lex-smallest element is local, so testing the rep suffices.
        let li = reps
            .iter()
            .position(|&b| b.is_local())
            .expect("a nonlocal centralizer contains a local coset");
        let c = reps.remove(li);
        debug_assert!(reps.iter().all(|&b| b.is_nonlocal() && a.add(b).is_nonlocal()));
        Ok(PerpDecomposition {
            a,
            c,
            c1: reps[0],
            c2: reps[1],
        })
    } else {
        Ok(PerpDecomposition {
            a,
            c: reps[0],
            c1: reps[1],
            c2: reps[2],
        })
    }
}
