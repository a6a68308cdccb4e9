use crate::error::PauliError;
use crate::label::PauliLabel;
use num_complex::Complex;

pub type C64i = Complex<i64>;

/// Exact 4x4 matrix over Gaussian integers. Clifford generators are stored as
/// an integer matrix m together with a scale s, representing m / sqrt(2)^s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat4 {
    pub e: [[C64i; 4]; 4],
}

impl Mat4 {
    pub fn zero() -> Self {
        Mat4 {
            e: [[Complex::new(0, 0); 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            m.e[i][i] = Complex::new(1, 0);
        }
        m
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.e[i][k];
                if a == Complex::new(0, 0) {
                    continue;
                }
                for j in 0..4 {
                    out.e[i][j] += a * other.e[k][j];
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> Mat4 {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = self.e[j][i].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: C64i) -> Mat4 {
        let mut out = self.clone();
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Exact division by 2^k; None if any entry is not divisible.
    pub fn div_pow2(&self, k: u32) -> Option<Mat4> {
        let d = 1i64 << k;
        let mut out = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let v = self.e[i][j];
                if v.re % d != 0 || v.im % d != 0 {
                    return None;
                }
                out.e[i][j] = Complex::new(v.re / d, v.im / d);
            }
        }
        Some(out)
    }
}

fn pauli2(letter: u8) -> [[C64i; 2]; 2] {
    let o = Complex::new(0i64, 0);
    let p = Complex::new(1i64, 0);
    let n = Complex::new(-1i64, 0);
    let i = Complex::new(0i64, 1);
    let ni = Complex::new(0i64, -1);
    match letter {
        0 => [[p, o], [o, p]],
        1 => [[o, p], [p, o]],
        2 => [[o, ni], [i, o]],
        3 => [[p, o], [o, n]],
        _ => unreachable!(),
    }
}

fn tensor(a: [[C64i; 2]; 2], b: [[C64i; 2]; 2]) -> Mat4 {
    let mut m = Mat4::zero();
    for r1 in 0..2 {
        for c1 in 0..2 {
            for r2 in 0..2 {
                for c2 in 0..2 {
                    m.e[2 * r1 + r2][2 * c1 + c2] = a[r1][c1] * b[r2][c2];
                }
            }
        }
    }
    m
}

/// The Pauli matrix T_a for a two-qubit label.
pub fn pauli_mat4(a: PauliLabel) -> Mat4 {
    let (q1, q2) = a.letters();
    tensor(pauli2(q1), pauli2(q2))
}

/// A unitary generator stored exactly as m / sqrt(2)^s.
#[derive(Clone, Debug)]
pub struct Gate {
    pub m: Mat4,
    pub s: u32,
    pub name: &'static str,
}

/// Named Clifford generators: "H1", "H2", "S1", "S2", "SWAP", "CZ".
pub fn gate(name: &str) -> Gate {
    let o = Complex::new(0i64, 0);
    let p = Complex::new(1i64, 0);
    let n = Complex::new(-1i64, 0);
    let i = Complex::new(0i64, 1);
    let h = [[p, p], [p, n]];
    let s = [[p, o], [o, i]];
    let id = [[p, o], [o, p]];
    match name {
        "H1" => Gate {
            m: tensor(h, id),
            s: 1,
            name: "H1",
        },
        "H2" => Gate {
            m: tensor(id, h),
            s: 1,
            name: "H2",
        },
        "S1" => Gate {
            m: tensor(s, id),
            s: 0,
            name: "S1",
        },
        "S2" => Gate {
            m: tensor(id, s),
            s: 0,
            name: "S2",
        },
        "SWAP" => {
            let mut m = Mat4::zero();
            m.e[0][0] = p;
            m.e[1][2] = p;
            m.e[2][1] = p;
            m.e[3][3] = p;
            Gate { m, s: 0, name: "SWAP" }
        }
        "CZ" => {
            let mut m = Mat4::identity();
            m.e[3][3] = n;
            Gate { m, s: 0, name: "CZ" }
        }
        _ => panic!("unknown gate {name}"),
    }
}

/// Exact conjugation (m T m^dagger) / 2^s; None if the result is not integral.
pub fn conj_scaled(g: &Gate, t: &Mat4) -> Option<Mat4> {
    g.m.mul(t).mul(&g.m.dagger()).div_pow2(g.s)
}

/// Finds (b, sign) with U T_a U^dagger = sign * T_b, if the conjugate is a
/// signed Pauli matrix.
pub fn match_signed_pauli(m: &Mat4) -> Result<(PauliLabel, i8), PauliError> {
    for b in 0..16u8 {
        let t = pauli_mat4(PauliLabel(b));
        for sign in [1i8, -1] {
            let cand = t.scale(Complex::new(sign as i64, 0));
            if *m == cand {
                return Ok((PauliLabel(b), sign));
            }
        }
    }
    Err(PauliError::NoSignedPermutation)
}
