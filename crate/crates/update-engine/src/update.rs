use crate::cnc::CncOperator;
use crate::error::UpdateError;
use crate::perp::perp_decomposition;
use lift_lambda::{parity, DeterministicVertex};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use pauli_core::{beta, OutcomeFunction, PauliLabel, Rat, Tableau, ALL_LABELS, LAMBDA_DIM};

/// Outcome of projecting a state onto the outcome-r eigenspace of T_a.
/// `post` carries the cnc-type terms, `remainder` any leftover traceless
/// Pauli terms (coefficient convention: the operator adds coeff/4 * T_b,
/// matching tableau units). When `normalized` is false the weights sum
/// to `probability`; `into_normalized` rescales them to sum to one.
#[derive(Debug, Clone)]
pub struct UpdateResult {
    pub probability: Rat,
    pub post: Vec<(Rat, CncOperator)>,
    pub remainder: Vec<(Rat, PauliLabel)>,
    pub normalized: bool,
}

impl UpdateResult {
    /// The tableau of the cnc part alone, excluding any remainder.
    pub fn post_tableau(&self) -> Tableau {
        let mut t = Tableau::zeros(LAMBDA_DIM);
        for (w, op) in &self.post {
            let ot = op.tableau();
            for &b in ALL_LABELS.iter() {
                let v = t.get(b).clone() + w.clone() * ot.get(b).clone();
                t.set(b, v);
            }
        }
        t
    }

    /// The 16-entry tableau of the represented operator. For an
    /// unnormalized result the identity entry equals the probability.
    pub fn tableau(&self) -> Tableau {
        let mut t = self.post_tableau();
        for (w, b) in &self.remainder {
            let v = t.get(*b).clone() + w.clone();
            t.set(*b, v);
        }
        t
    }

    /// Rescales all terms by 1/probability. Fails on a dead branch.
    pub fn into_normalized(self) -> Result<UpdateResult, UpdateError> {
        if self.probability.is_zero() {
            return Err(UpdateError::ZeroProbability);
        }
        let p = self.probability.clone();
        Ok(UpdateResult {
            probability: self.probability,
            post: self
                .post
                .into_iter()
                .map(|(w, op)| (w / p.clone(), op))
                .collect(),
            remainder: self
                .remainder
                .into_iter()
                .map(|(w, b)| (w / p.clone(), b))
                .collect(),
            normalized: true,
        })
    }
}

fn half() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2))
}

fn sign_of(bit: u8) -> Rat {
    if bit & 1 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Restriction of a deterministic outcome function to the centralizer
/// of a local label. Valid because every isotropic through a local
/// label has beta identically zero.
fn local_restriction(
    d: &DeterministicVertex,
    support: &[PauliLabel],
) -> Result<CncOperator, UpdateError> {
    let pairs: Vec<(PauliLabel, u8)> = support.iter().map(|&b| (b, d.xi_at(b))).collect();
    let chi = OutcomeFunction::from_pairs(&pairs)?;
    let op = CncOperator::new(support.to_vec(), chi)?;
    debug_assert!(op.is_closed());
    Ok(op)
}

/// The i-th surviving branch operator for a nonlocal measurement: xi
/// restricted to <a,c> and <a,c1>, extended to the c2 coset by
/// chi(c2) = i and chi(a+c2) = r + i + beta(a,c2). The orientation
/// beta(a,c1) = parity makes the restriction beta-closed.
fn survivor_op(
    d: &DeterministicVertex,
    a: PauliLabel,
    c: PauliLabel,
    c1: PauliLabel,
    c2: PauliLabel,
    r: u8,
    i: u8,
) -> Result<CncOperator, UpdateError> {
    let mut pairs: Vec<(PauliLabel, u8)> = [PauliLabel::IDENTITY, a, c, a.add(c), c1, a.add(c1)]
        .iter()
        .map(|&b| (b, d.xi_at(b)))
        .collect();
    pairs.push((c2, i));
    pairs.push((a.add(c2), (r + i + beta(a, c2)?) & 1));
    let chi = OutcomeFunction::from_pairs(&pairs)?;
    let support: Vec<PauliLabel> = pairs.iter().map(|p| p.0).collect();
    let op = CncOperator::new(support, chi)?;
    debug_assert!(op.is_closed());
    Ok(op)
}

/// Projects a deterministic vertex onto the outcome-r eigenspace of T_a.
///
/// Local a: the vertex survives untouched (restricted to the
/// centralizer) when xi(a) = r and is annihilated otherwise.
///
/// Nonlocal a: when xi(a) = r the image is the half-sum of the two
/// branch operators; when xi(a) = r+1 the image is traceless but
/// nonzero, reported as a remainder supported on the c2 coset.
pub fn update_deterministic(
    d: &DeterministicVertex,
    a: PauliLabel,
    r: u8,
) -> Result<UpdateResult, UpdateError> {
    let r = r & 1;
    let pd = perp_decomposition(a)?;
    let xi_a = d.xi_at(a);
    if a.is_local() {
        if xi_a == r {
            let op = local_restriction(d, &pd.perp())?;
            Ok(UpdateResult {
                probability: Rat::one(),
                post: vec![(Rat::one(), op)],
                remainder: Vec::new(),
                normalized: false,
            })
        } else {
            Ok(UpdateResult {
                probability: Rat::zero(),
                post: Vec::new(),
                remainder: Vec::new(),
                normalized: false,
            })
        }
    } else {
        let t = parity(d);
        let (c1, c2) = pd.oriented(t)?;
        if xi_a == r {
            let g0 = survivor_op(d, a, pd.c, c1, c2, r, 0)?;
            let g1 = survivor_op(d, a, pd.c, c1, c2, r, 1)?;
            Ok(UpdateResult {
                probability: Rat::one(),
                post: vec![(half(), g0), (half(), g1)],
                remainder: Vec::new(),
                normalized: false,
            })
        } else {
            let ac2 = a.add(c2);
            Ok(UpdateResult {
                probability: Rat::zero(),
                post: Vec::new(),
                remainder: vec![
                    (sign_of(d.xi_at(c2)), c2),
                    (sign_of(d.xi_at(ac2)), ac2),
                ],
                normalized: false,
            })
        }
    }
}

/// Projects a convex mixture of deterministic vertices. The update acts
/// linearly; afterwards each dead-branch remainder is recombined with
/// the first unconsumed surviving pair of equal weight and equal
/// outcome parity, which promotes that pair to the single operator
/// carrying the remainder's c2-coset values. Remainders with no
/// compatible partner are reported raw.
pub fn update_mixture(
    parts: &[(Rat, DeterministicVertex)],
    a: PauliLabel,
    r: u8,
) -> Result<UpdateResult, UpdateError> {
    let mut total = Rat::zero();
    for (w, _) in parts {
        if w < &Rat::zero() {
            return Err(UpdateError::BadWeights);
        }
        total += w.clone();
    }
    if !total.is_one() {
        return Err(UpdateError::BadWeights);
    }

    struct Survivor {
        weight: Rat,
        parity: u8,
        terms: Vec<(Rat, CncOperator)>,
        consumed: bool,
    }
    struct Dead {
        weight: Rat,
        parity: u8,
        terms: Vec<(Rat, PauliLabel)>,
        c2_value: u8,
    }

    let r = r & 1;
    let pd = perp_decomposition(a)?;
    let mut survivors: Vec<Survivor> = Vec::new();
    let mut deads: Vec<Dead> = Vec::new();
    for (w, d) in parts {
        if w.is_zero() {
            continue;
        }
        let step = update_deterministic(d, a, r)?;
        let par = parity(d);
        if step.probability.is_one() {
            survivors.push(Survivor {
                weight: w.clone(),
                parity: par,
                terms: step
                    .post
                    .into_iter()
                    .map(|(sw, op)| (sw * w.clone(), op))
                    .collect(),
                consumed: false,
            });
        } else {
            // Drop annihilated local branches; keep nonlocal remainders.
            if step.remainder.is_empty() {
                continue;
            }
            let (_, c2) = pd.oriented(par)?;
            deads.push(Dead {
                weight: w.clone(),
                parity: par,
                terms: step
                    .remainder
                    .into_iter()
                    .map(|(sw, b)| (sw * w.clone(), b))
                    .collect(),
                c2_value: d.xi_at(c2),
            });
        }
    }

    let mut combined: Vec<(Rat, CncOperator)> = Vec::new();
    let mut leftover: Vec<(Rat, PauliLabel)> = Vec::new();
    for dead in deads {
        let partner = survivors.iter_mut().find(|s| {
            !s.consumed && s.parity == dead.parity && s.weight == dead.weight
        });
        match partner {
            Some(s) => {
                s.consumed = true;
                // Promotion identity: remainder + half-pair = the branch
                // operator whose c2 value matches the dead vertex.
                let idx = dead.c2_value as usize;
                combined.push((dead.weight.clone(), s.terms[idx].1.clone()));
            }
            None => leftover.extend(dead.terms),
        }
    }

    let mut post = combined;
    for s in survivors {
        if !s.consumed {
            post.extend(s.terms);
        }
    }
    let probability: Rat = post.iter().map(|(w, _)| w.clone()).sum();
    Ok(UpdateResult {
        probability,
        post,
        remainder: leftover,
        normalized: false,
    })
}

/// Born rule in tableau coordinates: p = (1 + (-1)^r x_a) / 2.
pub fn born_probability(x: &Tableau, a: PauliLabel, r: u8) -> Result<Rat, UpdateError> {
    if x.dim() != LAMBDA_DIM {
        return Err(UpdateError::Dimension {
            expected: LAMBDA_DIM,
            got: x.dim(),
        });
    }
    if !x.is_normalized() {
        return Err(UpdateError::NotNormalized);
    }
    let signed = sign_of(r) * x.get(a).clone();
    Ok((Rat::one() + signed) * half())
}
