use intersect_dd::{classify_mpbar_orbits, mpbar_vertices_with_seed, MPBAR_VERTICES};
use mermin_poly::mp_vertices;
use num_bigint::BigInt;
use num_rational::BigRational;
use pauli_core::{enumerate_stabilizer_groups, g_group, Tableau};
use std::collections::BTreeSet;

fn rat_tab(nums: [i64; 10], den: i64) -> Tableau {
    Tableau(
        nums.iter()
            .map(|&n| BigRational::new(BigInt::from(n), BigInt::from(den)))
            .collect(),
    )
}

#[test]
fn the_census_is_order_independent() {
    assert_eq!(MPBAR_VERTICES.len(), 3912);
    for seed in [7u64, 99, 2026] {
        let shuffled = mpbar_vertices_with_seed(seed).unwrap();
        assert_eq!(&shuffled, &*MPBAR_VERTICES, "seed {seed}");
    }
}

#[test]
fn cutting_removes_exactly_the_apex_vertices() {
    let census: BTreeSet<&Tableau> = MPBAR_VERTICES.iter().collect();
    for v in &mp_vertices() {
        if v.is_type1() {
            assert!(census.contains(&v.coords));
        } else {
            assert!(!census.contains(&v.coords));
        }
    }
}

#[test]
fn ten_orbits_partition_the_census() {
    let table = classify_mpbar_orbits().unwrap();
    assert_eq!(table.vertices.len(), 3912);

    let sizes: Vec<usize> = table.classes.iter().map(|c| c.size).collect();
    assert_eq!(sizes, [24, 48, 96, 288, 576, 576, 576, 576, 576, 576]);

    let order = g_group().len();
    assert_eq!(order, 1152);

    let mut seen = vec![false; table.vertices.len()];
    for (k, class) in table.classes.iter().enumerate() {
        assert_eq!(class.id, k);
        assert_eq!(class.size, class.members.len());
        assert_eq!(order % class.size, 0);
        for &m in &class.members {
            assert!(!seen[m], "member {m} assigned twice");
            seen[m] = true;
        }
        let rep_min = class
            .members
            .iter()
            .map(|&m| &table.vertices[m])
            .min()
            .unwrap();
        assert_eq!(&class.representative, rep_min);
    }
    assert!(seen.iter().all(|&b| b));
}

#[test]
fn representatives_are_the_frozen_tableaux() {
    let table = classify_mpbar_orbits().unwrap();
    let reps: [([i64; 10], i64); 10] = [
        ([1, -1, 0, 0, 0, -1, 0, 0, 0, -1], 1),
        ([1, -1, -1, -1, 0, 0, 0, 0, 0, 0], 1),
        ([5, -3, -3, -1, -3, 1, 3, 1, -3, 3], 5),
        ([3, -2, -2, -1, -1, 1, -2, -1, 1, 2], 3),
        ([2, -2, -1, -1, 0, -1, -1, 0, 1, -1], 2),
        ([2, -2, -1, 0, -1, 0, -1, 0, 1, 0], 2),
        ([3, -3, -1, 0, -1, -1, -2, 0, 2, -1], 3),
        ([3, -3, -1, 0, -1, 1, -2, 0, 2, 1], 3),
        ([4, -3, -2, -1, -2, 1, 2, 0, -3, 2], 4),
        ([3, -2, -2, -1, -2, 0, 1, 0, -2, 1], 3),
    ];
    for (class, (nums, den)) in table.classes.iter().zip(reps) {
        assert_eq!(class.representative, rat_tab(nums, den), "class {}", class.id);
    }
}

#[test]
fn the_marked_classes_are_where_they_should_be() {
    let table = classify_mpbar_orbits().unwrap();

    let tau3_ids: Vec<usize> = table
        .classes
        .iter()
        .filter(|c| c.is_tau3)
        .map(|c| c.id)
        .collect();
    assert_eq!(tau3_ids, [0]);
    assert_eq!(table.classes[0].size, 24);

    assert_eq!(table.classes[1].size, 48);
    for class in &table.classes {
        let expected = if class.id == 1 { 48 } else { 0 };
        assert_eq!(class.t1bar_members, expected, "class {}", class.id);
    }

    let mut homes = [None; 4];
    for class in &table.classes {
        for &k in &class.contains_ui {
            assert!(homes[k].is_none(), "u{k} found twice");
            homes[k] = Some(class.id);
        }
    }
    assert_eq!(homes, [Some(4), Some(0), Some(5), Some(6)]);
}

#[test]
fn the_smallest_class_is_the_projected_stabilizer_states() {
    let table = classify_mpbar_orbits().unwrap();
    let projected: BTreeSet<Tableau> = enumerate_stabilizer_groups()
        .iter()
        .filter(|s| s.iso.is_nonlocal())
        .map(|s| s.state_tableau().project_nonlocal().unwrap())
        .collect();
    assert_eq!(projected.len(), 24);

    let members: BTreeSet<Tableau> = table.classes[0]
        .members
        .iter()
        .map(|&m| table.vertices[m].clone())
        .collect();
    assert_eq!(members, projected);
}
