use lift_lambda::{
    project, solve_decomposition, tight_dets, tight_facets_ui, type_fixtures, LiftError,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use pauli_core::{Rat, Tableau};
use std::collections::BTreeSet;

fn rat_tab(nums: &[i64], den: i64) -> Tableau {
    let d = BigInt::from(den);
    Tableau(
        nums.iter()
            .map(|&n| BigRational::new(BigInt::from(n), d.clone()))
            .collect(),
    )
}

/// The four projected targets, coordinates 1 | XX XY XZ YX YY YZ ZX ZY ZZ.
fn u_fixtures() -> [Tableau; 4] {
    [
        rat_tab(&[2, 2, 0, 0, 1, -1, -1, -1, -1, 1], 2),
        rat_tab(&[1, 1, 0, 0, 0, -1, 0, 0, 0, 1], 1),
        rat_tab(&[2, 1, 0, 0, 1, -2, 0, 0, -1, 1], 2),
        rat_tab(&[3, 2, 1, 0, 1, -2, -1, -1, 0, 3], 3),
    ]
}

fn row10(v: [i64; 10]) -> Vec<BigInt> {
    v.iter().map(|&n| BigInt::from(n)).collect()
}

fn expected_nn() -> [Vec<[i64; 10]>; 4] {
    [
        vec![[1, -1, 0, 0, 0, 0, 0, 0, 0, 0]],
        vec![
            [1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0, 0, -1],
        ],
        vec![[1, 0, 0, 0, 0, 1, 0, 0, 0, 0]],
        vec![[1, 0, 0, 0, 0, 0, 0, 0, 0, -1]],
    ]
}

fn expected_chsh() -> [Vec<[i64; 10]>; 4] {
    [
        vec![
            [2, -1, -1, 0, -1, 1, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 1, 1, 0, 1, -1],
            [2, 0, 0, 0, -1, 1, 0, 1, 1, 0],
            [2, -1, 1, 0, 0, 0, 0, 1, 1, 0],
            [2, -1, 0, -1, 0, 0, 0, 1, 0, -1],
            [2, -1, 0, -1, -1, 0, 1, 0, 0, 0],
        ],
        vec![
            [2, -1, 1, 0, 1, 1, 0, 0, 0, 0],
            [2, -1, -1, 0, -1, 1, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 1, 1, 0, 1, -1],
            [2, 0, 0, 0, 0, 1, -1, 0, -1, -1],
            [2, -1, 0, 1, 0, 0, 0, -1, 0, -1],
            [2, -1, 0, -1, 0, 0, 0, 1, 0, -1],
        ],
        vec![
            [2, -1, -1, 0, -1, 1, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 1, 1, 0, 1, -1],
            [2, 0, 0, 0, -1, 1, 0, 1, 1, 0],
        ],
        vec![
            [2, -1, -1, 0, -1, 1, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 1, 1, 0, 1, -1],
            [2, -1, 0, -1, 0, 0, 0, 1, 0, -1],
        ],
    ]
}

/// Tight projected deterministic vertices per target, as (signs, parity).
fn expected_columns() -> [Vec<([i64; 10], u8)>; 4] {
    [
        vec![
            ([1, 1, 1, 1, -1, -1, -1, -1, -1, -1], 0),
            ([1, 1, 1, -1, 1, 1, -1, -1, -1, 1], 0),
            ([1, 1, -1, 1, 1, -1, 1, 1, -1, 1], 1),
            ([1, 1, -1, -1, 1, -1, -1, -1, 1, 1], 1),
        ],
        vec![
            ([1, 1, 1, 1, -1, -1, -1, 1, 1, 1], 1),
            ([1, 1, -1, 1, 1, -1, 1, 1, -1, 1], 1),
            ([1, 1, -1, -1, 1, -1, -1, -1, 1, 1], 1),
            ([1, 1, 1, -1, -1, -1, 1, -1, -1, 1], 1),
        ],
        vec![
            ([1, 1, 1, 1, -1, -1, -1, -1, -1, -1], 0),
            ([1, -1, 1, -1, 1, -1, 1, 1, -1, 1], 0),
            ([1, -1, 1, 1, 1, -1, -1, -1, 1, 1], 0),
            ([1, 1, -1, -1, 1, -1, -1, 1, -1, -1], 0),
            ([1, -1, 1, 1, 1, -1, -1, 1, -1, -1], 1),
            ([1, 1, -1, 1, 1, -1, 1, 1, -1, 1], 1),
            ([1, 1, -1, -1, 1, -1, -1, -1, 1, 1], 1),
            ([1, 1, 1, -1, -1, -1, 1, -1, -1, 1], 1),
        ],
        vec![
            ([1, -1, 1, 1, 1, -1, -1, -1, 1, 1], 0),
            ([1, 1, 1, -1, 1, 1, -1, -1, -1, 1], 0),
            ([1, 1, 1, 1, -1, -1, -1, 1, 1, 1], 1),
            ([1, 1, -1, 1, 1, -1, 1, 1, -1, 1], 1),
            ([1, 1, -1, -1, 1, -1, -1, -1, 1, 1], 1),
            ([1, 1, 1, -1, -1, -1, 1, -1, -1, 1], 1),
        ],
    ]
}

#[test]
fn tight_facets_match_the_frozen_tables() {
    let nn_expected = expected_nn();
    let chsh_expected = expected_chsh();
    for (i, u) in u_fixtures().iter().enumerate() {
        let facets = tight_facets_ui(u).unwrap();
        let nn: BTreeSet<Vec<BigInt>> = facets.nn.iter().cloned().collect();
        let nn_want: BTreeSet<Vec<BigInt>> =
            nn_expected[i].iter().map(|r| row10(*r)).collect();
        assert_eq!(nn, nn_want, "u{i} counter facets");

        let chsh: BTreeSet<Vec<BigInt>> = facets.chsh.iter().map(|h| h.row.clone()).collect();
        let chsh_want: BTreeSet<Vec<BigInt>> =
            chsh_expected[i].iter().map(|r| row10(*r)).collect();
        assert_eq!(chsh, chsh_want, "u{i} correlation facets");

        assert_eq!(facets.len(), facets.nn.len() + facets.chsh.len());
        assert_eq!(facets.rows().len(), facets.len());
        for row in facets.rows() {
            assert!(u.dot_row(&row).is_zero());
        }
    }
}

#[test]
fn tight_projections_match_the_frozen_columns() {
    let expected = expected_columns();
    for (i, u) in u_fixtures().iter().enumerate() {
        let dets = tight_dets(u).unwrap();
        assert_eq!(dets.len(), expected[i].len(), "u{i} column count");
        let got: BTreeSet<(Tableau, u8)> = dets
            .iter()
            .map(|p| (p.coords.clone(), p.parity))
            .collect();
        let want: BTreeSet<(Tableau, u8)> = expected[i]
            .iter()
            .map(|(signs, parity)| (rat_tab(signs, 1), *parity))
            .collect();
        assert_eq!(got, want, "u{i} columns");
    }
}

#[test]
fn weights_are_uniform_with_the_frozen_support() {
    let solutions: Vec<_> = u_fixtures()
        .iter()
        .map(|u| solve_decomposition(u).unwrap())
        .collect();
    assert_eq!(
        solutions.iter().map(Vec::len).collect::<Vec<_>>(),
        vec![1, 1, 3, 1]
    );

    for (i, sols) in solutions.iter().enumerate() {
        for d in sols {
            let k = d.support.len();
            assert_eq!(d.q.len(), k);
            let share = BigRational::new(BigInt::from(1), BigInt::from(k));
            assert!(d.q.iter().all(|w| *w == share), "u{i} uniform weights");
            assert_eq!(d.unique, sols.len() == 1, "u{i} uniqueness flag");

            let mut acc = Tableau::zeros(10);
            for (w, p) in d.q.iter().zip(&d.support) {
                for (slot, c) in acc.0.iter_mut().zip(&p.coords.0) {
                    *slot += w * c;
                }
            }
            assert_eq!(acc, d.target, "u{i} reconstruction");
        }
    }

    assert_eq!(solutions[0][0].support.len(), 4);
    assert_eq!(solutions[1][0].support.len(), 4);
    assert_eq!(solutions[3][0].support.len(), 6);

    // The third target admits three basic solutions, each uniform on four of
    // the eight tight columns; exactly one is supported on the four odd-parity
    // columns.
    let supports: Vec<BTreeSet<Tableau>> = solutions[2]
        .iter()
        .map(|d| d.support.iter().map(|p| p.coords.clone()).collect())
        .collect();
    assert!(supports.iter().all(|s| s.len() == 4));
    assert_ne!(supports[0], supports[1]);
    assert_ne!(supports[0], supports[2]);
    assert_ne!(supports[1], supports[2]);
    let odd: Vec<&lift_lambda::Decomposition> = solutions[2]
        .iter()
        .filter(|d| d.support.iter().all(|p| p.parity == 1))
        .collect();
    assert_eq!(odd.len(), 1);
    let odd_want: BTreeSet<Tableau> = expected_columns()[2]
        .iter()
        .filter(|(_, parity)| *parity == 1)
        .map(|(signs, _)| rat_tab(signs, 1))
        .collect();
    let odd_got: BTreeSet<Tableau> = odd[0].support.iter().map(|p| p.coords.clone()).collect();
    assert_eq!(odd_got, odd_want);
}

#[test]
fn points_outside_the_projected_system_are_rejected() {
    let apex = project(&type_fixtures()[1].1).unwrap();
    match tight_facets_ui(&apex) {
        Err(LiftError::OutsideMpbar { .. }) => {}
        other => panic!("expected outside error, got {other:?}"),
    }
    match solve_decomposition(&apex) {
        Err(LiftError::OutsideMpbar { .. }) => {}
        other => panic!("expected outside error, got {other:?}"),
    }

    let wide = Tableau::from_ints(&[1; 16]);
    match tight_facets_ui(&wide) {
        Err(LiftError::Dimension { expected, got }) => assert_eq!((expected, got), (10, 16)),
        other => panic!("expected dimension error, got {other:?}"),
    }

    let mut unscaled = u_fixtures()[0].clone();
    for v in unscaled.0.iter_mut() {
        *v *= Rat::from_integer(BigInt::from(2));
    }
    match tight_facets_ui(&unscaled) {
        Err(LiftError::NotNormalized) => {}
        other => panic!("expected normalization error, got {other:?}"),
    }
}
