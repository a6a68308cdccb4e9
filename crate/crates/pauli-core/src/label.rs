use crate::error::PauliError;
use std::fmt;
use std::str::FromStr;

/// A two-qubit Pauli label, phase-free. Stored as the canonical index
/// 4*q1 + q2 with per-qubit letters 0=I, 1=X, 2=Y, 3=Z, so the derived
/// order is II, IX, IY, IZ, XI, XX, ..., ZZ.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliLabel(pub u8);

const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];

/// Per-qubit symplectic coordinates (z, x): I=(0,0), X=(0,1), Y=(1,1), Z=(1,0).
const ZX: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 1), (1, 0)];

pub const ALL_LABELS: [PauliLabel; 16] = {
    let mut out = [PauliLabel(0); 16];
    let mut i = 0;
    while i < 16 {
        out[i] = PauliLabel(i as u8);
        i += 1;
    }
    out
};

/// The nine nonlocal labels in canonical order: XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ.
pub const NONLOCAL_LABELS: [PauliLabel; 9] = [
    PauliLabel(5),
    PauliLabel(6),
    PauliLabel(7),
    PauliLabel(9),
    PauliLabel(10),
    PauliLabel(11),
    PauliLabel(13),
    PauliLabel(14),
    PauliLabel(15),
];

impl PauliLabel {
    pub const IDENTITY: PauliLabel = PauliLabel(0);

    pub fn from_letters(q1: u8, q2: u8) -> Self {
        debug_assert!(q1 < 4 && q2 < 4);
        PauliLabel(4 * q1 + q2)
    }

    pub fn letters(self) -> (u8, u8) {
        (self.0 >> 2, self.0 & 3)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn is_local(self) -> bool {
        let (a, b) = self.letters();
        self.0 != 0 && (a == 0 || b == 0)
    }

    pub fn is_nonlocal(self) -> bool {
        let (a, b) = self.letters();
        a != 0 && b != 0
    }

    /// Group addition in Z2^2 x Z2^2 (per-qubit symplectic xor).
    pub fn add(self, other: PauliLabel) -> PauliLabel {
        fn add1(p: u8, q: u8) -> u8 {
            let (z1, x1) = ZX[p as usize];
            let (z2, x2) = ZX[q as usize];
            let (z, x) = (z1 ^ z2, x1 ^ x2);
            match (z, x) {
                (0, 0) => 0,
                (0, 1) => 1,
                (1, 1) => 2,
                (1, 0) => 3,
                _ => unreachable!(),
            }
        }
        let (a1, a2) = self.letters();
        let (b1, b2) = other.letters();
        PauliLabel::from_letters(add1(a1, b1), add1(a2, b2))
    }
}

/// Symplectic form: 0 when the operators commute, 1 when they anticommute.
pub fn omega(a: PauliLabel, b: PauliLabel) -> u8 {
    fn omega1(p: u8, q: u8) -> u8 {
        let (z1, x1) = ZX[p as usize];
        let (z2, x2) = ZX[q as usize];
        (z1 * x2 + x1 * z2) & 1
    }
    let (a1, a2) = a.letters();
    let (b1, b2) = b.letters();
    (omega1(a1, b1) + omega1(a2, b2)) & 1
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.letters();
        write!(f, "{}{}", LETTERS[a as usize], LETTERS[b as usize])
    }
}

impl fmt::Debug for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PauliLabel {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        let chars: Vec<char> = up.chars().collect();
        if chars.len() != 2 {
            return Err(PauliError::BadLabel(s.to_string()));
        }
        let pos = |c: char| LETTERS.iter().position(|&l| l == c);
        match (pos(chars[0]), pos(chars[1])) {
            (Some(a), Some(b)) => Ok(PauliLabel::from_letters(a as u8, b as u8)),
            _ => Err(PauliError::BadLabel(s.to_string())),
        }
    }
}
