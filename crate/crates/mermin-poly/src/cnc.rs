use crate::error::MerminError;
use pauli_core::{beta, enumerate_isotropics, omega, IsotropicSubspace, OutcomeFunction, PauliLabel};

/// A maximal closed noncontextual subset of the nine nonlocal labels. Either
/// a triple of pairwise anticommuting labels sharing a tensor leg, or the
/// union of the two nonlocal isotropics through a common apex label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CncSet {
    Triple {
        elements: [PauliLabel; 3],
    },
    ApexPair {
        apex: PauliLabel,
        isos: [IsotropicSubspace; 2],
    },
}

impl CncSet {
    /// The nonzero labels of the set, sorted. Three for a triple, five for
    /// an apex pair.
    pub fn omega_nonzero(&self) -> Vec<PauliLabel> {
        match self {
            CncSet::Triple { elements } => elements.to_vec(),
            CncSet::ApexPair { apex, isos } => {
                let mut out = vec![*apex];
                for iso in isos {
                    for l in iso.nonzero() {
                        if l != *apex {
                            out.push(l);
                        }
                    }
                }
                out.sort();
                out
            }
        }
    }

    /// The boundary: everything except the apex. A triple is its own
    /// boundary.
    pub fn boundary(&self) -> Vec<PauliLabel> {
        match self {
            CncSet::Triple { elements } => elements.to_vec(),
            CncSet::ApexPair { apex, .. } => self
                .omega_nonzero()
                .into_iter()
                .filter(|l| l != apex)
                .collect(),
        }
    }

    pub fn contains(&self, a: PauliLabel) -> bool {
        self.omega_nonzero().contains(&a)
    }

    pub fn is_triple(&self) -> bool {
        matches!(self, CncSet::Triple { .. })
    }
}

/// The apex-pair cnc set through a nonlocal label.
pub fn apex_cnc(apex: PauliLabel) -> Result<CncSet, MerminError> {
    if !apex.is_nonlocal() {
        return Err(MerminError::BadDomain(format!("{apex} is not nonlocal")));
    }
    let isos: Vec<IsotropicSubspace> = enumerate_isotropics()
        .into_iter()
        .filter(|i| i.is_nonlocal() && i.contains(apex))
        .collect();
    assert_eq!(isos.len(), 2, "a nonlocal label lies in two nonlocal isotropics");
    Ok(CncSet::ApexPair {
        apex,
        isos: [isos[0], isos[1]],
    })
}

/// All 15 maximal cnc sets: 6 anticommuting triples followed by 9 apex
/// pairs, each block sorted by element list.
pub fn enumerate_cnc() -> Vec<CncSet> {
    let mut triples: Vec<[PauliLabel; 3]> = Vec::new();
    for l in 1..=3u8 {
        triples.push([
            PauliLabel::from_letters(l, 1),
            PauliLabel::from_letters(l, 2),
            PauliLabel::from_letters(l, 3),
        ]);
        triples.push([
            PauliLabel::from_letters(1, l),
            PauliLabel::from_letters(2, l),
            PauliLabel::from_letters(3, l),
        ]);
    }
    for t in &mut triples {
        t.sort();
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert_eq!(omega(t[i], t[j]), 1, "triple elements anticommute");
            }
        }
    }
    triples.sort();
    let mut out: Vec<CncSet> = triples
        .into_iter()
        .map(|elements| CncSet::Triple { elements })
        .collect();
    for &apex in pauli_core::NONLOCAL_LABELS.iter() {
        out.push(apex_cnc(apex).expect("nonlocal apex"));
    }
    out
}

/// The 8 valid outcome assignments of a cnc set, in a fixed order: three
/// free sign bits run as a big-endian counter. For a triple the bits sit on
/// the sorted elements; for an apex pair on (apex, b1, b2) where b_i is the
/// smallest non-apex label of each isotropic, the rest following closure.
pub fn assignments(cnc: &CncSet) -> Vec<OutcomeFunction> {
    let mut out = Vec::with_capacity(8);
    match cnc {
        CncSet::Triple { elements } => {
            for bits in 0..8u8 {
                let pairs: Vec<(PauliLabel, u8)> = elements
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| (l, (bits >> (2 - i)) & 1))
                    .collect();
                let g = OutcomeFunction::from_pairs(&pairs).expect("fresh labels");
                out.push(g);
            }
        }
        CncSet::ApexPair { apex, isos } => {
            let free: Vec<PauliLabel> = isos
                .iter()
                .map(|iso| {
                    *iso.nonzero()
                        .iter()
                        .filter(|&&l| l != *apex)
                        .min()
                        .unwrap()
                })
                .collect();
            for bits in 0..8u8 {
                let ea = (bits >> 2) & 1;
                let mut pairs = vec![(*apex, ea)];
                for (k, &b) in free.iter().enumerate() {
                    let eb = (bits >> (1 - k)) & 1;
                    let c = apex.add(b);
                    let bt = beta(*apex, b).expect("isotropic pair commutes");
                    pairs.push((b, eb));
                    pairs.push((c, (ea + eb + bt) & 1));
                }
                let g = OutcomeFunction::from_pairs(&pairs).expect("fresh labels");
                debug_assert!(g.is_valid());
                out.push(g);
            }
        }
    }
    out
}
