//! Classical lifts through the binary selection hypercube.

use crate::decompose::Decomposition;
use crate::det::project;
use crate::error::LiftError;
use crate::lambda::{verify_lambda_vertex, LambdaVertexReport};
use pauli_core::{Tableau, LAMBDA_DIM};

/// Mixes one preimage per support column: alpha_k = 1 takes the canonical
/// preimage of column k, alpha_k = 0 its antipode. The projection of the
/// result is the decomposed point.
pub fn classical_lift(decomp: &Decomposition, alpha: &[u8]) -> Result<Tableau, LiftError> {
    if alpha.len() != decomp.support.len() {
        return Err(LiftError::AlphaLength {
            expected: decomp.support.len(),
            got: alpha.len(),
        });
    }
    if alpha.iter().any(|&b| b > 1) {
        return Err(LiftError::BadAlpha);
    }
    let mut x = Tableau::zeros(LAMBDA_DIM);
    for ((d, w), &bit) in decomp.support.iter().zip(&decomp.q).zip(alpha) {
        let lift = if bit == 1 { &d.pair.0 } else { &d.pair.1 };
        for i in 0..LAMBDA_DIM {
            x.0[i] += w * &lift.tableau.0[i];
        }
    }
    debug_assert_eq!(
        project(&x).expect("16 entries by construction"),
        decomp.target
    );
    Ok(x)
}

/// Evaluates every alpha selection and keeps those lifting to polytope
/// vertices, masks ascending with column 0 in the low bit.
pub fn search_lifts(
    decomp: &Decomposition,
) -> Result<Vec<(Vec<u8>, LambdaVertexReport)>, LiftError> {
    let k = decomp.support.len();
    assert!(k < 16, "selection search is meant for small supports");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << k) {
        let alpha: Vec<u8> = (0..k).map(|i| ((mask >> i) & 1) as u8).collect();
        let x = classical_lift(decomp, &alpha)?;
        let report = verify_lambda_vertex(&x)?;
        if report.is_vertex {
            out.push((alpha, report));
        }
    }
    Ok(out)
}
