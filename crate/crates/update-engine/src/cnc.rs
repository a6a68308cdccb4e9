use crate::error::UpdateError;
use lift_lambda::DeterministicVertex;
use num_traits::One;
use pauli_core::{OutcomeFunction, PauliLabel, Rat, Tableau, ALL_LABELS, LAMBDA_DIM};

/// A cnc-type phase-point operator A^chi_Gamma: a closed noncontextual
/// support Gamma containing the identity together with an outcome
/// assignment chi on it. The tableau entry at b is (-1)^chi(b) on Gamma
/// and 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CncOperator {
    support: Vec<PauliLabel>,
    chi: OutcomeFunction,
}

impl CncOperator {
    /// Builds an operator from a support and an assignment whose domain
    /// matches it exactly. The identity must be present with chi(0) = 0,
    /// which OutcomeFunction already pins.
    pub fn new(mut support: Vec<PauliLabel>, chi: OutcomeFunction) -> Result<Self, UpdateError> {
        support.sort();
        support.dedup();
        if !support.contains(&PauliLabel::IDENTITY) {
            return Err(UpdateError::BadOperator(
                "support must contain the identity".into(),
            ));
        }
        let domain: Vec<PauliLabel> = chi.domain().collect();
        if domain != support {
            return Err(UpdateError::BadOperator(format!(
                "assignment domain {domain:?} does not match support {support:?}"
            )));
        }
        Ok(CncOperator { support, chi })
    }

    /// The rank-one case: Gamma is all sixteen labels and chi is the
    /// deterministic outcome function.
    pub fn deterministic(d: &DeterministicVertex) -> Self {
        let chi = OutcomeFunction::from_pairs(
            &ALL_LABELS
                .iter()
                .map(|&b| (b, d.xi_at(b)))
                .collect::<Vec<_>>(),
        )
        .expect("deterministic assignments are consistent");
        CncOperator {
            support: ALL_LABELS.to_vec(),
            chi,
        }
    }

    pub fn support(&self) -> &[PauliLabel] {
        &self.support
    }

    pub fn chi(&self) -> &OutcomeFunction {
        &self.chi
    }

    pub fn value(&self, b: PauliLabel) -> Option<u8> {
        self.chi.get(b)
    }

    /// Whether chi respects beta-closure on every commuting pair inside
    /// the support. All operators built by the update rules satisfy this.
    pub fn is_closed(&self) -> bool {
        self.chi.is_valid()
    }

    /// The 16-entry expansion coefficient vector of A^chi_Gamma.
    pub fn tableau(&self) -> Tableau {
        let mut t = Tableau::zeros(LAMBDA_DIM);
        for &b in &self.support {
            let v = self.chi.get(b).expect("domain matches support");
            let sign = if v == 0 { Rat::one() } else { -Rat::one() };
            t.set(b, sign);
        }
        t
    }
}
