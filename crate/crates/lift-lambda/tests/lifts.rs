use lift_lambda::{
    classical_lift, det_vertex, project, projected_dets, search_lifts, solve_decomposition,
    type_fixtures, verify_lambda_vertex, Decomposition, DeterministicVertex, LiftError,
    ProjectedDet, VertexType,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use pauli_core::{Rat, Tableau};
use std::collections::{BTreeMap, BTreeSet};

fn rat_tab(nums: &[i64], den: i64) -> Tableau {
    let d = BigInt::from(den);
    Tableau(
        nums.iter()
            .map(|&n| BigRational::new(BigInt::from(n), d.clone()))
            .collect(),
    )
}

fn u_fixtures() -> [Tableau; 4] {
    [
        rat_tab(&[2, 2, 0, 0, 1, -1, -1, -1, -1, 1], 2),
        rat_tab(&[1, 1, 0, 0, 0, -1, 0, 0, 0, 1], 1),
        rat_tab(&[2, 1, 0, 0, 1, -2, 0, 0, -1, 1], 2),
        rat_tab(&[3, 2, 1, 0, 1, -2, -1, -1, 0, 3], 3),
    ]
}

/// The published selections, one signed column per chosen deterministic
/// vertex, rows ordered II XI YI ZI IX IY IZ.
fn printed_tables() -> [Vec<[i8; 7]>; 4] {
    [
        vec![
            [1, -1, 1, 1, -1, -1, -1],
            [1, -1, -1, 1, -1, -1, 1],
            [1, 1, 1, 1, 1, -1, 1],
            [1, -1, -1, 1, -1, 1, 1],
        ],
        vec![
            [1, -1, 1, -1, -1, -1, -1],
            [1, -1, -1, -1, -1, 1, -1],
            [1, 1, 1, -1, 1, -1, -1],
            [1, -1, 1, 1, -1, -1, 1],
        ],
        vec![
            [1, 1, -1, -1, -1, 1, 1],
            [1, -1, -1, -1, -1, 1, -1],
            [1, -1, -1, 1, -1, 1, 1],
            [1, -1, 1, 1, -1, -1, 1],
        ],
        vec![
            [1, 1, -1, 1, -1, 1, 1],
            [1, -1, -1, 1, -1, -1, 1],
            [1, 1, -1, 1, 1, 1, 1],
            [1, -1, -1, -1, -1, 1, -1],
            [1, -1, -1, 1, -1, 1, 1],
            [1, -1, 1, 1, -1, -1, 1],
        ],
    ]
}

/// Selection bits accompanying the printed tables, in table column order.
fn published_alphas() -> [Vec<u8>; 4] {
    [
        vec![0, 0, 1, 1],
        vec![0, 0, 1, 0],
        vec![1, 0, 0, 0],
        vec![1, 0, 1, 0, 0, 0],
    ]
}

fn det_from_column(col: &[i8; 7]) -> DeterministicVertex {
    assert_eq!(col[0], 1);
    let bit = |v: i8| (v < 0) as u8;
    det_vertex(
        [bit(col[1]), bit(col[2]), bit(col[3])],
        [bit(col[4]), bit(col[5]), bit(col[6])],
    )
}

fn uniform_mix(dets: &[DeterministicVertex]) -> Tableau {
    let share = BigRational::new(BigInt::from(1), BigInt::from(dets.len()));
    let mut acc = Tableau::zeros(16);
    for d in dets {
        for (slot, v) in acc.0.iter_mut().zip(&d.tableau.0) {
            *slot += &share * v;
        }
    }
    acc
}

fn pair_of(d: &DeterministicVertex) -> ProjectedDet {
    projected_dets()
        .into_iter()
        .find(|p| p.pair.0 == *d || p.pair.1 == *d)
        .unwrap()
}

fn entry_multiset(x: &Tableau) -> BTreeMap<Rat, usize> {
    let mut out = BTreeMap::new();
    for v in &x.0 {
        *out.entry(v.clone()).or_insert(0usize) += 1;
    }
    out
}

#[test]
fn printed_tables_mix_to_the_four_vertex_types() {
    let tables = printed_tables();
    let targets = u_fixtures();
    let expected = [
        (VertexType::T3, 21),
        (VertexType::T5, 21),
        (VertexType::T6, 20),
        (VertexType::T7, 17),
    ];
    for i in 0..4 {
        let dets: Vec<_> = tables[i].iter().map(det_from_column).collect();
        let distinct: BTreeSet<_> = dets.iter().map(|d| d.tableau.clone()).collect();
        assert_eq!(distinct.len(), dets.len(), "table {i} repeats a column");

        let mix = uniform_mix(&dets);
        assert_eq!(project(&mix).unwrap(), targets[i], "table {i} projection");

        let report = verify_lambda_vertex(&mix).unwrap();
        assert!(report.is_vertex && report.degenerate, "table {i} mix");
        assert_eq!(report.orbit_type, expected[i].0, "table {i} type");
        assert_eq!(report.tight_count, expected[i].1, "table {i} tight count");
    }
    // The first table reproduces the third representative verbatim.
    let first = uniform_mix(&tables[0].iter().map(det_from_column).collect::<Vec<_>>());
    assert_eq!(first, type_fixtures()[2].1);
}

/// Each printed column picks one member of its antipodal pair. Relative to
/// the canonical order (bit 1 selects the lighter member) the tables spell
/// the published selection bits for the last three targets; the first
/// published selection flips the final column instead.
#[test]
fn printed_columns_agree_with_the_published_bits_up_to_one_flip() {
    let tables = printed_tables();
    let published = published_alphas();
    let mut roles = Vec::new();
    for table in &tables {
        let r: Vec<u8> = table
            .iter()
            .map(|col| {
                let d = det_from_column(col);
                (pair_of(&d).pair.0 == d) as u8
            })
            .collect();
        roles.push(r);
    }
    assert_eq!(roles[0], vec![0, 0, 1, 0]);
    assert_eq!(roles[1], published[1]);
    assert_eq!(roles[2], published[2]);
    assert_eq!(roles[3], published[3]);
    assert_ne!(roles[0], published[0]);
}

#[test]
fn published_selections_lift_to_known_vertices() {
    let tables = printed_tables();
    let published = published_alphas();
    let expected = [
        (VertexType::T6, 20),
        (VertexType::T5, 21),
        (VertexType::T6, 20),
        (VertexType::T7, 17),
    ];
    let targets = u_fixtures();
    for i in 0..4 {
        let chosen: Vec<DeterministicVertex> = tables[i]
            .iter()
            .zip(&published[i])
            .map(|(col, &bit)| {
                let pair = pair_of(&det_from_column(col)).pair;
                if bit == 1 {
                    pair.0
                } else {
                    pair.1
                }
            })
            .collect();
        let mix = uniform_mix(&chosen);
        assert_eq!(project(&mix).unwrap(), targets[i]);
        let report = verify_lambda_vertex(&mix).unwrap();
        assert!(report.is_vertex && report.degenerate);
        assert_eq!(report.orbit_type, expected[i].0, "selection {i} type");
        assert_eq!(report.tight_count, expected[i].1, "selection {i} tight count");

        let table_mix = uniform_mix(&tables[i].iter().map(det_from_column).collect::<Vec<_>>());
        if i == 0 {
            assert_ne!(mix, table_mix);
        } else {
            assert_eq!(mix, table_mix);
        }
    }

    let expected_entries: BTreeMap<Rat, usize> = [
        (BigRational::new(BigInt::from(-1), BigInt::from(1)), 1),
        (BigRational::new(BigInt::from(-1), BigInt::from(2)), 4),
        (BigRational::new(BigInt::from(0), BigInt::from(1)), 5),
        (BigRational::new(BigInt::from(1), BigInt::from(2)), 4),
        (BigRational::new(BigInt::from(1), BigInt::from(1)), 2),
    ]
    .into_iter()
    .collect();
    let chosen: Vec<DeterministicVertex> = tables[0]
        .iter()
        .zip(&published[0])
        .map(|(col, &bit)| {
            let pair = pair_of(&det_from_column(col)).pair;
            if bit == 1 {
                pair.0
            } else {
                pair.1
            }
        })
        .collect();
    assert_eq!(entry_multiset(&uniform_mix(&chosen)), expected_entries);
}

fn search_outcome(d: &Decomposition) -> Vec<(Vec<u8>, VertexType)> {
    search_lifts(d)
        .unwrap()
        .into_iter()
        .map(|(alpha, report)| (alpha, report.orbit_type))
        .collect()
}

#[test]
fn the_search_finds_the_frozen_selections() {
    use VertexType::{T3, T5, T6, T7};
    let targets = u_fixtures();

    let sols0 = solve_decomposition(&targets[0]).unwrap();
    assert_eq!(
        search_outcome(&sols0[0]),
        vec![
            (vec![1, 0, 0, 0], T3),
            (vec![1, 0, 1, 0], T6),
            (vec![1, 1, 1, 0], T3),
            (vec![0, 0, 0, 1], T3),
            (vec![0, 1, 0, 1], T6),
            (vec![0, 1, 1, 1], T3),
        ]
    );

    let sols1 = solve_decomposition(&targets[1]).unwrap();
    let found1 = search_outcome(&sols1[0]);
    assert_eq!(found1.len(), 8);
    assert!(found1.iter().all(|(_, ty)| *ty == T5));
    // Exactly the odd-weight selections lift to vertices here.
    let odd: BTreeSet<Vec<u8>> = (0u32..16)
        .filter(|m| m.count_ones() % 2 == 1)
        .map(|m| (0..4).map(|i| ((m >> i) & 1) as u8).collect())
        .collect();
    let got: BTreeSet<Vec<u8>> = found1.into_iter().map(|(a, _)| a).collect();
    assert_eq!(got, odd);

    let sols2 = solve_decomposition(&targets[2]).unwrap();
    assert_eq!(sols2.len(), 3);
    let signatures: Vec<Vec<u8>> = sols2
        .iter()
        .map(|d| d.support.iter().map(|p| p.parity).collect())
        .collect();
    assert_eq!(signatures[0], vec![1, 1, 1, 1]);
    assert_eq!(signatures[1], vec![1, 1, 0, 0]);
    assert_eq!(signatures[2], vec![1, 0, 0, 1]);
    assert_eq!(
        search_outcome(&sols2[0]),
        vec![
            (vec![1, 0, 0, 0], T6),
            (vec![1, 1, 0, 0], T5),
            (vec![1, 1, 1, 0], T6),
            (vec![0, 0, 0, 1], T6),
            (vec![0, 0, 1, 1], T5),
            (vec![0, 1, 1, 1], T6),
        ]
    );
    assert_eq!(
        search_outcome(&sols2[1]),
        vec![
            (vec![0, 0, 1, 0], T5),
            (vec![0, 1, 1, 0], T6),
            (vec![1, 0, 0, 1], T6),
            (vec![1, 1, 0, 1], T5),
        ]
    );
    assert_eq!(
        search_outcome(&sols2[2]),
        vec![
            (vec![1, 1, 0, 0], T5),
            (vec![0, 0, 1, 0], T6),
            (vec![1, 1, 0, 1], T6),
            (vec![0, 0, 1, 1], T5),
        ]
    );

    let sols3 = solve_decomposition(&targets[3]).unwrap();
    assert_eq!(
        search_outcome(&sols3[0]),
        vec![
            (vec![0, 0, 0, 1, 1, 0], T7),
            (vec![1, 1, 1, 0, 0, 1], T7),
        ]
    );

    // Complementing a vertex selection swaps every chosen member for its
    // antipode, which lands in the same orbit.
    for sols in [&sols0, &sols1, &sols2, &sols3] {
        for d in sols.iter() {
            let found = search_outcome(d);
            let index: BTreeMap<Vec<u8>, VertexType> = found.iter().cloned().collect();
            for (alpha, ty) in &found {
                let flipped: Vec<u8> = alpha.iter().map(|b| 1 - b).collect();
                assert_eq!(index.get(&flipped), Some(ty));
            }
        }
    }
}

/// Every selection stays inside the polytope: the local rows hold for any
/// mixture of deterministic vertices, and the nonlocal rows depend only on
/// the projection, which the decomposition fixes.
#[test]
fn every_selection_lifts_into_the_polytope() {
    let expected_vertex_counts = [vec![6usize], vec![8], vec![6, 4, 4], vec![2]];
    for (u, counts) in u_fixtures().iter().zip(expected_vertex_counts) {
        let sols = solve_decomposition(u).unwrap();
        assert_eq!(sols.len(), counts.len());
        for (d, want) in sols.iter().zip(counts) {
            let k = d.support.len();
            let mut vertices = 0usize;
            for mask in 0u32..(1 << k) {
                let alpha: Vec<u8> = (0..k).map(|i| ((mask >> i) & 1) as u8).collect();
                let x = classical_lift(d, &alpha).unwrap();
                assert!(x.0[0].is_one());
                assert_eq!(project(&x).unwrap(), d.target);
                let report = verify_lambda_vertex(&x).unwrap();
                assert!(report.feasible, "selection {alpha:?} leaves the polytope");
                if report.is_vertex {
                    vertices += 1;
                }
            }
            assert_eq!(vertices, want);
        }
    }
}

#[test]
fn selection_validation() {
    let sols = solve_decomposition(&u_fixtures()[0]).unwrap();
    match classical_lift(&sols[0], &[1, 0]) {
        Err(LiftError::AlphaLength { expected, got }) => assert_eq!((expected, got), (4, 2)),
        other => panic!("expected length error, got {other:?}"),
    }
    match classical_lift(&sols[0], &[2, 0, 0, 0]) {
        Err(LiftError::BadAlpha) => {}
        other => panic!("expected bad alpha error, got {other:?}"),
    }
}
