use crate::error::PauliError;
use crate::label::{omega, PauliLabel};
use crate::matrix::pauli_mat4;
use num_complex::Complex;
use once_cell::sync::Lazy;
use std::collections::BTreeMap;

/// beta(a,b) for commuting labels: T_a T_b = (-1)^beta T_{a+b}.
/// Entries are -1 where the pair anticommutes and beta is undefined.
static BETA_TABLE: Lazy<[[i8; 16]; 16]> = Lazy::new(|| {
    let mut table = [[-1i8; 16]; 16];
    for a in 0..16u8 {
        for b in 0..16u8 {
            let (la, lb) = (PauliLabel(a), PauliLabel(b));
            if omega(la, lb) != 0 {
                continue;
            }
            let prod = pauli_mat4(la).mul(&pauli_mat4(lb));
            let c = la.add(lb);
            let tc = pauli_mat4(c);
            let plus = tc.clone();
            let minus = tc.scale(Complex::new(-1, 0));
            table[a as usize][b as usize] = if prod == plus {
                0
            } else if prod == minus {
                1
            } else {
                unreachable!("product of commuting Paulis is a signed Pauli");
            };
        }
    }
    table
});

/// The sign function on commuting pairs. Errors on anticommuting input.
pub fn beta(a: PauliLabel, b: PauliLabel) -> Result<u8, PauliError> {
    let v = BETA_TABLE[a.index()][b.index()];
    if v < 0 {
        Err(PauliError::NonCommuting(a.to_string(), b.to_string()))
    } else {
        Ok(v as u8)
    }
}

/// A partial outcome assignment gamma: domain -> Z2 with gamma(II) = 0.
/// Validity on a commuting domain means gamma(a)+gamma(b)+beta(a,b) = gamma(a+b)
/// whenever a, b, a+b all lie in the domain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct OutcomeFunction {
    vals: BTreeMap<PauliLabel, u8>,
}

impl OutcomeFunction {
    pub fn new() -> Self {
        let mut vals = BTreeMap::new();
        vals.insert(PauliLabel::IDENTITY, 0);
        OutcomeFunction { vals }
    }

    pub fn from_pairs(pairs: &[(PauliLabel, u8)]) -> Result<Self, PauliError> {
        let mut f = OutcomeFunction::new();
        for &(a, v) in pairs {
            f.set(a, v)?;
        }
        Ok(f)
    }

    pub fn set(&mut self, a: PauliLabel, v: u8) -> Result<(), PauliError> {
        let v = v & 1;
        if let Some(&old) = self.vals.get(&a) {
            if old != v {
                return Err(PauliError::BadAssignment(a.to_string()));
            }
            return Ok(());
        }
        self.vals.insert(a, v);
        Ok(())
    }

    pub fn get(&self, a: PauliLabel) -> Option<u8> {
        self.vals.get(&a).copied()
    }

    pub fn domain(&self) -> impl Iterator<Item = PauliLabel> + '_ {
        self.vals.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.len() <= 1
    }

    /// Checks the closure rule on every commuting pair inside the domain.
    pub fn is_valid(&self) -> bool {
        let labels: Vec<PauliLabel> = self.vals.keys().copied().collect();
        for &a in &labels {
            for &b in &labels {
                if omega(a, b) != 0 {
                    continue;
                }
                let c = a.add(b);
                if let (Some(&va), Some(&vb), Some(&vc)) =
                    (self.vals.get(&a), self.vals.get(&b), self.vals.get(&c))
                {
                    let bt = beta(a, b).expect("commuting");
                    if (va + vb + bt) & 1 != vc {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn sign(&self, a: PauliLabel) -> Option<i8> {
        self.get(a).map(|v| if v == 0 { 1 } else { -1 })
    }
}
