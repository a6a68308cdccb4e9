use crate::error::UpdateError;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use pauli_core::{pauli_mat4, PauliLabel, Rat, Tableau, ALL_LABELS, LAMBDA_DIM};
use std::sync::OnceLock;

type CRat = Complex<Rat>;
type CMat = [[CRat; 4]; 4];

fn zeros() -> CMat {
    std::array::from_fn(|_| std::array::from_fn(|_| CRat::zero()))
}

/// The sixteen Pauli matrices lifted to Gaussian-rational entries.
fn paulis() -> &'static [CMat; 16] {
    static CACHE: OnceLock<[CMat; 16]> = OnceLock::new();
    CACHE.get_or_init(|| {
        std::array::from_fn(|idx| {
            let m = pauli_mat4(ALL_LABELS[idx]);
            std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let v = m.e[i][j];
                    Complex::new(
                        Rat::from_integer(BigInt::from(v.re)),
                        Rat::from_integer(BigInt::from(v.im)),
                    )
                })
            })
        })
    })
}

fn matmul(a: &CMat, b: &CMat) -> CMat {
    let mut out = zeros();
    for i in 0..4 {
        for k in 0..4 {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..4 {
                out[i][j] = out[i][j].clone() + a[i][k].clone() * b[k][j].clone();
            }
        }
    }
    out
}

fn trace_prod(t: &CMat, m: &CMat) -> CRat {
    let mut acc = CRat::zero();
    for i in 0..4 {
        for j in 0..4 {
            if t[i][j].is_zero() {
                continue;
            }
            acc = acc + t[i][j].clone() * m[j][i].clone();
        }
    }
    acc
}

/// The Hermitian matrix (1/4) sum_b x_b T_b encoded by a tableau.
fn operator_matrix(x: &Tableau) -> Result<CMat, UpdateError> {
    if x.dim() != LAMBDA_DIM {
        return Err(UpdateError::Dimension {
            expected: LAMBDA_DIM,
            got: x.dim(),
        });
    }
    let ts = paulis();
    let quarter = Rat::new(BigInt::one(), BigInt::from(4));
    let mut m = zeros();
    for (idx, &b) in ALL_LABELS.iter().enumerate() {
        let coeff = x.get(b).clone() * quarter.clone();
        if coeff.is_zero() {
            continue;
        }
        let scale = CRat::new(coeff, Rat::zero());
        for i in 0..4 {
            for j in 0..4 {
                if ts[idx][i][j].is_zero() {
                    continue;
                }
                m[i][j] = m[i][j].clone() + scale.clone() * ts[idx][i][j].clone();
            }
        }
    }
    Ok(m)
}

/// Dense reference for the update rules: reconstructs the matrix of a
/// tableau, conjugates by the projector (1 + (-1)^r T_a)/2, and reads
/// the sixteen expansion coefficients back. Exact throughout; for a
/// normalized input the identity entry of the output is the Born
/// probability of outcome r.
pub fn oracle_conjugate(x: &Tableau, a: PauliLabel, r: u8) -> Result<Tableau, UpdateError> {
    let m = operator_matrix(x)?;
    let ts = paulis();
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let signed_half = if r & 1 == 0 { half.clone() } else { -half.clone() };
    let mut p = zeros();
    for i in 0..4 {
        p[i][i] = CRat::new(half.clone(), Rat::zero());
    }
    let ta = &ts[a.index()];
    let scale = CRat::new(signed_half, Rat::zero());
    for i in 0..4 {
        for j in 0..4 {
            if ta[i][j].is_zero() {
                continue;
            }
            p[i][j] = p[i][j].clone() + scale.clone() * ta[i][j].clone();
        }
    }
    let pmp = matmul(&matmul(&p, &m), &p);
    let mut y = Tableau::zeros(LAMBDA_DIM);
    for (idx, &b) in ALL_LABELS.iter().enumerate() {
        let tr = trace_prod(&ts[idx], &pmp);
        assert!(tr.im.is_zero(), "conjugated operator must stay Hermitian");
        y.set(b, tr.re);
    }
    Ok(y)
}
