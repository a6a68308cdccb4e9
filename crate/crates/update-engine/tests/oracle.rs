use lift_lambda::type_fixtures;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use pauli_core::{PauliLabel, Rat, Tableau, ALL_LABELS, LAMBDA_DIM, MERMIN_DIM};
use update_engine::{born_probability, oracle_conjugate, UpdateError};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn scale(t: &Tableau, f: &Rat) -> Tableau {
    Tableau(t.0.iter().map(|v| v.clone() * f.clone()).collect())
}

fn nonidentity_labels() -> Vec<PauliLabel> {
    ALL_LABELS.iter().copied().filter(|a| !a.is_identity()).collect()
}

#[test]
fn projections_are_idempotent_and_trace_to_the_born_rule() {
    for (ty, x) in type_fixtures() {
        for a in nonidentity_labels() {
            let mut total = Rat::zero();
            for r in 0..2u8 {
                let y = oracle_conjugate(&x, a, r).unwrap();
                let p = y.get(PauliLabel::IDENTITY).clone();
                assert_eq!(p, born_probability(&x, a, r).unwrap(), "{ty} a={a} r={r}");
                assert!(p >= Rat::zero());
                total += p.clone();
                if !p.is_zero() {
                    let z = scale(&y, &(Rat::one() / p));
                    assert_eq!(
                        oracle_conjugate(&z, a, r).unwrap(),
                        z,
                        "projected states are fixed points"
                    );
                }
            }
            assert!(total.is_one());
        }
    }
}

#[test]
fn the_maximally_mixed_state_projects_onto_the_outcome_operator() {
    let mut x = Tableau::zeros(LAMBDA_DIM);
    x.set(PauliLabel::IDENTITY, Rat::one());
    for a in nonidentity_labels() {
        for r in 0..2u8 {
            let y = oracle_conjugate(&x, a, r).unwrap();
            let mut expect = Tableau::zeros(LAMBDA_DIM);
            expect.set(PauliLabel::IDENTITY, rat(1, 2));
            expect.set(a, if r == 0 { rat(1, 2) } else { rat(-1, 2) });
            assert_eq!(y, expect);
        }
    }
}

#[test]
fn conjugation_is_linear_in_the_input() {
    let fixtures = type_fixtures();
    let x = &fixtures[6].1;
    let a: PauliLabel = "YZ".parse().unwrap();
    let doubled = scale(x, &rat(2, 1));
    for r in 0..2u8 {
        let y = oracle_conjugate(x, a, r).unwrap();
        let dy = oracle_conjugate(&doubled, a, r).unwrap();
        assert_eq!(dy, scale(&y, &rat(2, 1)));
    }
}

#[test]
fn wrong_dimensions_are_rejected() {
    let short = Tableau::zeros(MERMIN_DIM);
    assert!(matches!(
        oracle_conjugate(&short, "XX".parse().unwrap(), 0),
        Err(UpdateError::Dimension {
            expected: 16,
            got: 10
        })
    ));
}
