use intersect_dd::{intersection_setup, verify_conditions};
use mermin_poly::pairing_value;
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn setup_ties_the_marked_sets_together() {
    let setup = intersection_setup().unwrap();
    assert_eq!(setup.p1_vertices.len(), 120);
    assert_eq!(setup.apex_indices.len(), 72);
    assert_eq!(setup.p2_rows.nrows(), 90);
    assert_eq!(setup.chsh_row_range, 18..90);
    assert_eq!(setup.chsh.len(), 72);
    assert_eq!(setup.duality.len(), 72);

    let mut image = setup.duality.clone();
    image.sort_unstable();
    image.dedup();
    assert_eq!(image, setup.apex_indices);

    for (k, h) in setup.chsh.iter().enumerate() {
        let dual = &setup.p1_vertices[setup.duality[k]];
        assert_eq!(pairing_value(h, dual), rat(-2));
    }
}

#[test]
fn conditions_hold_with_a_tight_sandwich() {
    let setup = intersection_setup().unwrap();
    let report = verify_conditions(&setup).unwrap();
    assert!(report.pass(), "failures: {:?}", report.failures);
    assert!(report.failures.is_empty());

    assert_eq!(report.violators.len(), 72);
    for (k, (idx, val)) in report.violators.iter().enumerate() {
        assert_eq!(*idx, setup.duality[k]);
        assert_eq!(*val, rat(-2));
    }

    assert_eq!(report.nonneighbor_pairs, 1980);
    assert_eq!(report.min_cross_product, Some(rat(4)));
    assert_eq!(report.max_self_product, Some(rat(4)));
}
