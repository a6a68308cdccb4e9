use num_traits::One;
use pauli_core::{
    apply_action, cl2_group, enumerate_isotropics, enumerate_stabilizer_groups, g_group,
    group_generate, omega, orbit, PauliLabel, Rat, SignedPermutation, Tableau, NONLOCAL_LABELS,
};
use std::str::FromStr;

fn l(s: &str) -> PauliLabel {
    PauliLabel::from_str(s).unwrap()
}

#[test]
fn fifteen_isotropics_split_nine_local_six_nonlocal() {
    let isos = enumerate_isotropics();
    assert_eq!(isos.len(), 15);
    let nonlocal = isos.iter().filter(|i| i.is_nonlocal()).count();
    assert_eq!(nonlocal, 6);
    for iso in &isos {
        let nz = iso.nonzero();
        for &a in nz.iter() {
            for &b in nz.iter() {
                assert_eq!(omega(a, b), 0);
            }
        }
        assert_eq!(nz[0].add(nz[1]), nz[2]);
    }
}

#[test]
fn each_nonlocal_label_lies_in_exactly_two_nonlocal_isotropics() {
    let isos = enumerate_isotropics();
    for &a in NONLOCAL_LABELS.iter() {
        let count = isos
            .iter()
            .filter(|i| i.is_nonlocal() && i.contains(a))
            .count();
        assert_eq!(count, 2, "{a}");
    }
}

#[test]
fn sixty_stabilizer_groups_split_thirty_six_local_twenty_four_nonlocal() {
    let groups = enumerate_stabilizer_groups();
    assert_eq!(groups.len(), 60);
    let nonlocal = groups.iter().filter(|g| g.iso.is_nonlocal()).count();
    assert_eq!(nonlocal, 24);
    for g in &groups {
        assert!(g.gamma.is_valid());
    }
}

#[test]
fn nonlocal_sign_fixtures() {
    // All-plus subgroups exist exactly for the anticommuting-transposed
    // triples; the mixed triples force one minus sign.
    let groups = enumerate_stabilizer_groups();
    let all_plus = |labels: [&str; 3]| {
        groups.iter().any(|g| {
            labels.iter().all(|s| g.gamma.get(l(s)) == Some(0)) && g.iso.is_nonlocal()
        })
    };
    assert!(all_plus(["XY", "YX", "ZZ"]));
    assert!(all_plus(["YZ", "ZY", "XX"]));
    assert!(all_plus(["ZX", "XZ", "YY"]));
    assert!(!all_plus(["XY", "ZX", "YZ"]));
    assert!(!all_plus(["YX", "XZ", "ZY"]));
    assert!(!all_plus(["ZZ", "YY", "XX"]));
    // The minus-signed representative appears instead.
    let signed = |a: &str, b: &str, c: &str| {
        groups.iter().any(|g| {
            g.gamma.get(l(a)) == Some(0) && g.gamma.get(l(b)) == Some(0) && g.gamma.get(l(c)) == Some(1)
        })
    };
    assert!(signed("XY", "ZX", "YZ"));
    assert!(signed("YX", "XZ", "ZY"));
    assert!(signed("ZZ", "YY", "XX"));
}

#[test]
fn local_group_has_order_1152() {
    assert_eq!(g_group().len(), 1152);
}

#[test]
fn clifford_group_has_order_11520() {
    assert_eq!(cl2_group().len(), 11520);
}

#[test]
fn identity_generates_the_trivial_group() {
    let g = group_generate(&[SignedPermutation::identity()]);
    assert_eq!(g.len(), 1);
}

#[test]
fn swap_transposes_the_two_qubits() {
    let swap = g_group()
        .iter()
        .find(|g| {
            (0..16).all(|i| {
                let a = PauliLabel(i as u8);
                let (q1, q2) = a.letters();
                g.perm[i] == PauliLabel::from_letters(q2, q1).0 && g.signs[i] == 1
            })
        })
        .copied();
    assert!(swap.is_some(), "SWAP missing from the local group");
}

#[test]
fn local_group_preserves_the_nonlocal_block_but_cl2_does_not() {
    assert!(g_group().iter().all(|g| g.preserves_nonlocal()));
    assert!(cl2_group().iter().any(|g| !g.preserves_nonlocal()));
}

#[test]
fn action_on_ten_entry_vectors_errors_for_entangling_symmetries() {
    let bad = cl2_group().iter().find(|g| !g.preserves_nonlocal()).unwrap();
    let t = Tableau::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert!(apply_action(bad, &t).is_err());
}

#[test]
fn stabilizer_state_orbit_size_divides_group_order() {
    let groups = enumerate_stabilizer_groups();
    let state = groups
        .iter()
        .find(|g| g.iso.is_nonlocal())
        .unwrap()
        .state_tableau();
    let orb = orbit(g_group(), &state).unwrap();
    assert_eq!(1152 % orb.len(), 0);
    for t in &orb {
        assert!(t.0[0].is_one());
    }
}

#[test]
fn group_action_preserves_dot_products() {
    let groups = enumerate_stabilizer_groups();
    let t = groups[0].state_tableau();
    let s = groups[17].state_tableau();
    let dot = |x: &Tableau, y: &Tableau| -> Rat {
        x.0.iter().zip(y.0.iter()).map(|(a, b)| a * b).sum()
    };
    let before = dot(&t, &s);
    for g in g_group().iter().step_by(97) {
        let tg = apply_action(g, &t).unwrap();
        let sg = apply_action(g, &s).unwrap();
        assert_eq!(dot(&tg, &sg), before);
    }
}
