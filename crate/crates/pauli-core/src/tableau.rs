use crate::error::PauliError;
use crate::label::{PauliLabel, NONLOCAL_LABELS};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

/// Full expectation vector length: one entry per label, II first.
pub const LAMBDA_DIM: usize = 16;
/// Homogenized nonlocal vector length: x0 followed by the nine nonlocal labels.
pub const MERMIN_DIM: usize = 10;

/// Canonical positions of the nonlocal labels inside a 16-entry tableau.
pub const NONLOCAL_POSITIONS: [usize; 9] = [5, 6, 7, 9, 10, 11, 13, 14, 15];

/// An exact expectation vector. Length 16 lists every label in canonical
/// order with x_II = 1 for states; length 10 is the homogenized nonlocal
/// restriction [x0, XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tableau(pub Vec<Rat>);

impl Tableau {
    pub fn zeros(dim: usize) -> Self {
        Tableau(vec![Rat::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Tableau(v.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, a: PauliLabel) -> &Rat {
        assert_eq!(self.0.len(), LAMBDA_DIM, "label indexing needs a full tableau");
        &self.0[a.index()]
    }

    pub fn set(&mut self, a: PauliLabel, v: Rat) {
        assert_eq!(self.0.len(), LAMBDA_DIM, "label indexing needs a full tableau");
        self.0[a.index()] = v;
    }

    /// Entry for a nonlocal label in a 10-entry vector.
    pub fn get_nonlocal(&self, a: PauliLabel) -> &Rat {
        assert_eq!(self.0.len(), MERMIN_DIM);
        let pos = NONLOCAL_LABELS
            .iter()
            .position(|&l| l == a)
            .expect("nonlocal label");
        &self.0[1 + pos]
    }

    pub fn set_nonlocal(&mut self, a: PauliLabel, v: Rat) {
        assert_eq!(self.0.len(), MERMIN_DIM);
        let pos = NONLOCAL_LABELS
            .iter()
            .position(|&l| l == a)
            .expect("nonlocal label");
        self.0[1 + pos] = v;
    }

    /// Restriction of a full tableau to [x_II | nonlocal block].
    pub fn project_nonlocal(&self) -> Result<Tableau, PauliError> {
        if self.0.len() != LAMBDA_DIM {
            return Err(PauliError::Dimension {
                expected: LAMBDA_DIM,
                got: self.0.len(),
            });
        }
        let mut out = Vec::with_capacity(MERMIN_DIM);
        out.push(self.0[0].clone());
        for &p in NONLOCAL_POSITIONS.iter() {
            out.push(self.0[p].clone());
        }
        Ok(Tableau(out))
    }

    pub fn is_normalized(&self) -> bool {
        self.0[0] == Rat::one()
    }

    /// Exact dot product against an integer row of matching length.
    pub fn dot_row(&self, row: &[BigInt]) -> Rat {
        assert_eq!(row.len(), self.0.len());
        let mut acc = Rat::zero();
        for (x, c) in self.0.iter().zip(row.iter()) {
            if !c.is_zero() {
                acc += x * Rat::from_integer(c.clone());
            }
        }
        acc
    }
}
