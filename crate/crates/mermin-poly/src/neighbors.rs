use crate::error::MerminError;
use crate::vertex::MerminVertex;
use exact_polytope::{joint_rank, HPoly, Rat};
use num_traits::{One, Signed, Zero};
use pauli_core::{enumerate_isotropics, IsotropicSubspace, PauliLabel, NONLOCAL_LABELS};

/// The six nonlocal isotropics in the same order as the mp_hpoly row
/// blocks (rows 4t..4t+4 belong to triangle t).
pub fn nonlocal_isotropics() -> Vec<IsotropicSubspace> {
    enumerate_isotropics()
        .into_iter()
        .filter(|i| i.is_nonlocal())
        .collect()
}

/// Neighbors of a vertex in the 10-dimensional cone over the polytope:
/// the common tight rows of the pair must leave exactly a 2-face, so their
/// rank is dim - 2 = 8.
pub fn neighbors(
    p: &HPoly,
    verts: &[MerminVertex],
    v: &MerminVertex,
) -> Result<Vec<usize>, MerminError> {
    let mut out = Vec::new();
    for (i, w) in verts.iter().enumerate() {
        if w.coords == v.coords {
            continue;
        }
        if joint_rank(p, &v.coords.0, &w.coords.0)? == 8 {
            out.push(i);
        }
    }
    Ok(out)
}

/// The combinatorial joint-rank certificate for a pair of vertices.
#[derive(Clone, Debug)]
pub struct SignedRankReport {
    /// Labels where the midpoint is deterministic (value +-1).
    pub deterministic_edges: Vec<PauliLabel>,
    /// One tight row selected per triangle that admits one, as mp_hpoly
    /// row indices.
    pub selected_rows: Vec<usize>,
    /// Balanced components of the signed graph.
    pub balanced_components: usize,
    pub rank: usize,
}

/// Joint rank of two distinct vertices from the signed graph of their
/// midpoint, without any matrix elimination. Per triangle the midpoint is
/// tight on 3 rows (all three labels deterministic), 2 rows (exactly one
/// deterministic, keep the lower row index), or at most 1 row (none
/// deterministic). Selected rows become graph nodes; each label links the
/// selected rows of its two triangles with sign -h_a h'_a, or dangles as a
/// half-edge when only one side selected. Rank = deterministic labels +
/// selected rows - balanced components, where a component is balanced only
/// if it has no half-edge and no negative circle.
pub fn joint_rank_signed_graph(
    p: &HPoly,
    v: &MerminVertex,
    w: &MerminVertex,
) -> Result<SignedRankReport, MerminError> {
    if v.coords == w.coords {
        return Err(MerminError::SamePoint);
    }
    let u: Vec<Rat> = v
        .coords
        .0
        .iter()
        .zip(w.coords.0.iter())
        .map(|(a, b)| (a + b) / Rat::from_integer(2.into()))
        .collect();
    let isos = nonlocal_isotropics();
    assert_eq!(p.nrows(), 24, "signed-graph ranks run over the 24-row system");

    let col = |a: PauliLabel| 1 + NONLOCAL_LABELS.iter().position(|&l| l == a).unwrap();
    let is_det = |a: PauliLabel| u[col(a)].abs().is_one();

    let deterministic_edges: Vec<PauliLabel> = NONLOCAL_LABELS
        .iter()
        .copied()
        .filter(|&a| is_det(a))
        .collect();

    // One node per triangle that contributes a tight row of its own.
    let mut node_of_triangle = [None::<usize>; 6];
    let mut selected_rows = Vec::new();
    for (t, iso) in isos.iter().enumerate() {
        let dets = iso.nonzero().iter().filter(|&&a| is_det(a)).count();
        let tights: Vec<usize> = (4 * t..4 * t + 4)
            .filter(|&r| p.value(r, &u).is_zero())
            .collect();
        let pick = match (dets, tights.len()) {
            (3, 3) | (0, 0) => None,
            (1, 2) | (0, 1) => Some(tights[0]),
            _ => {
                return Err(MerminError::TriangleCensus {
                    triangle: t,
                    dets,
                    tights: tights.len(),
                })
            }
        };
        if let Some(r) = pick {
            node_of_triangle[t] = Some(selected_rows.len());
            selected_rows.push(r);
        }
    }

    // Full edges between doubly selected triangles, half-edges otherwise.
    let n = selected_rows.len();
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); n];
    let mut half = vec![false; n];
    for &a in NONLOCAL_LABELS.iter() {
        let ts: Vec<usize> = isos
            .iter()
            .enumerate()
            .filter(|(_, iso)| iso.contains(a))
            .map(|(t, _)| t)
            .collect();
        assert_eq!(ts.len(), 2, "every nonlocal label sits in two triangles");
        let c = col(a);
        let coef = |node: usize| -> i8 {
            let entry = &p.row(selected_rows[node])[c];
            if entry.is_positive() {
                1
            } else {
                -1
            }
        };
        match (node_of_triangle[ts[0]], node_of_triangle[ts[1]]) {
            (Some(x), Some(y)) => {
                let sign = -coef(x) * coef(y);
                adj[x].push((y, sign));
                adj[y].push((x, sign));
            }
            (Some(x), None) => half[x] = true,
            (None, Some(y)) => half[y] = true,
            (None, None) => {}
        }
    }

    // Balance by sign propagation: a cross edge disagreeing with the
    // propagated signs closes a negative circle.
    let mut comp = vec![usize::MAX; n];
    let mut balanced_components = 0;
    let mut next_comp = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut tau = vec![0i8; n];
        tau[start] = 1;
        comp[start] = next_comp;
        let mut queue = vec![start];
        let mut members = vec![start];
        let mut balanced = true;
        while let Some(x) = queue.pop() {
            for &(y, sign) in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next_comp;
                    tau[y] = tau[x] * sign;
                    queue.push(y);
                    members.push(y);
                } else if tau[y] != tau[x] * sign {
                    balanced = false;
                }
            }
        }
        if members.iter().any(|&x| half[x]) {
            balanced = false;
        }
        if balanced {
            balanced_components += 1;
        }
        next_comp += 1;
    }

    let rank = deterministic_edges.len() + n - balanced_components;
    Ok(SignedRankReport {
        deterministic_edges,
        selected_rows,
        balanced_components,
        rank,
    })
}
