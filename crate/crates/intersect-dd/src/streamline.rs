use crate::error::IntersectError;
use exact_polytope::{exact_rank, rref_rat, tight_rank, tight_set, Int, Rat};
use mermin_poly::{
    chsh_family, joint_rank_signed_graph, neighbors, pairing_value, phi_inverse, vertex_index,
    vertex_v, vertex_v_prime, w_vertices, ChshInequality, MerminVertex, MPBAR_HPOLY, MP_HPOLY,
    MP_VERTICES,
};
use num_traits::{One, Zero};
use pauli_core::Tableau;
use std::collections::BTreeSet;

/// A point generated by the streamlined DD step: the convex combination of
/// the unique violator v and a satisfying vertex w that lands on the
/// cutting hyperplane.
#[derive(Clone, Debug)]
pub struct StreamlinedVertex {
    pub v: MerminVertex,
    pub w: MerminVertex,
    pub p: Rat,
    pub coords: Tableau,
}

/// Combines the violator v with a vertex w on the satisfying side into the
/// point u = p v + (1-p) w on the hyperplane, p = 1/(1 - (h.v)/(h.w)).
pub fn streamlined_vertex(
    v: &MerminVertex,
    w: &MerminVertex,
    h_v: &ChshInequality,
) -> Result<StreamlinedVertex, IntersectError> {
    let hv = pairing_value(h_v, v);
    let hw = pairing_value(h_v, w);
    if hw < Rat::zero() {
        return Err(IntersectError::WrongSideW(hw.to_string()));
    }
    if hv > Rat::zero() {
        return Err(IntersectError::WrongSideV(hv.to_string()));
    }
    let p = if hv.is_zero() {
        Rat::one()
    } else {
        &hw / (&hw - &hv)
    };
    let q = Rat::one() - &p;
    let coords = Tableau(
        v.coords
            .0
            .iter()
            .zip(w.coords.0.iter())
            .map(|(a, b)| &p * a + &q * b)
            .collect(),
    );
    debug_assert!(coords.dot_row(&h_v.row).is_zero());
    Ok(StreamlinedVertex {
        v: v.clone(),
        w: w.clone(),
        p,
        coords,
    })
}

/// True when h is tight at x by the overlap criterion: the cnc set of x
/// meets the boundary of h in exactly two labels, with the assignment of x
/// flipped against h on both.
fn tight_by_overlap(h: &ChshInequality, x: &MerminVertex) -> bool {
    let boundary = h.cnc.boundary();
    let overlap: Vec<_> = x
        .cnc
        .omega_nonzero()
        .into_iter()
        .filter(|a| boundary.contains(a))
        .collect();
    overlap.len() == 2
        && overlap.iter().all(|&a| {
            let gx = x.gamma.get(a).expect("overlap is inside the domain of x");
            let gh = h.gamma.get(a).expect("boundary is the domain of h");
            gx == gh ^ 1
        })
}

/// The CHSH rows tight at both points, located combinatorially rather than
/// by evaluating the 72 dot products.
pub fn tight_chsh_pairs(v: &MerminVertex, w: &MerminVertex) -> Vec<ChshInequality> {
    chsh_family()
        .into_iter()
        .filter(|h| tight_by_overlap(h, v) && tight_by_overlap(h, w))
        .collect()
}

/// Exact-rank data certifying that a streamlined point is a vertex of the
/// intersection: the joint tight system inside MP alone is rank deficient,
/// and the full 114-row tight system restores rank 9.
#[derive(Clone, Debug)]
pub struct RankCertificate {
    pub mp_joint_rows: usize,
    pub mp_joint_rank: usize,
    pub mpbar_tight_count: usize,
    pub mpbar_tight_rank: usize,
}

/// Rows of the 24-row MP system tight at both points, in row order.
pub fn joint_tight_rows(v: &MerminVertex, w: &MerminVertex) -> Vec<Vec<Int>> {
    let zero = Rat::zero();
    MP_HPOLY
        .rows()
        .iter()
        .filter(|row| v.coords.dot_row(row) == zero && w.coords.dot_row(row) == zero)
        .cloned()
        .collect()
}

/// Reduced echelon form of the joint tight system with the constant column
/// moved last, matching the Pauli-coefficient column order XX..ZZ, II.
pub fn matrix_tight(v: &MerminVertex, w: &MerminVertex) -> Vec<Vec<Rat>> {
    let rows: Vec<Vec<Rat>> = joint_tight_rows(v, w)
        .into_iter()
        .map(|row| {
            let mut r: Vec<Rat> = row[1..].iter().map(|c| Rat::from_integer(c.clone())).collect();
            r.push(Rat::from_integer(row[0].clone()));
            r
        })
        .collect();
    rref_rat(&rows)
}

#[derive(Clone, Debug)]
pub struct ReconstructedVertex {
    pub streamlined: StreamlinedVertex,
    pub certificate: RankCertificate,
}

fn certify(
    v: &MerminVertex,
    w: &MerminVertex,
    u: StreamlinedVertex,
) -> Result<ReconstructedVertex, IntersectError> {
    let ts = tight_set(&MPBAR_HPOLY, &u.coords.0)?;
    let joint = joint_tight_rows(v, w);
    let certificate = RankCertificate {
        mp_joint_rows: joint.len(),
        mp_joint_rank: exact_rank(&joint),
        mpbar_tight_count: ts.len(),
        mpbar_tight_rank: tight_rank(&MPBAR_HPOLY, &u.coords.0)?,
    };
    Ok(ReconstructedVertex {
        streamlined: u,
        certificate,
    })
}

/// Rebuilds the four new vertex families on the canonical cutting plane.
/// The partners are the frozen fixtures; each is checked to be a neighbor
/// of v' but not of v before combining, and each combination must come
/// back as a genuine vertex of the intersection: the joint tight system
/// inside the 24-row polytope is rank deficient (7, 6, 6, 6) and the tight
/// rows of the full 114-row system restore rank 9.
pub fn reconstruct_ui() -> Result<Vec<ReconstructedVertex>, IntersectError> {
    let verts = &*MP_VERTICES;
    let v = vertex_v();
    let vp = vertex_v_prime();
    let h_v = phi_inverse(&v)?;
    let mut out = Vec::with_capacity(4);
    for w in w_vertices() {
        vertex_index(verts, &w).ok_or_else(|| {
            IntersectError::BadSetup("partner fixture is not a vertex".into())
        })?;
        if joint_rank_signed_graph(&MP_HPOLY, &vp, &w)?.rank != 8 {
            return Err(IntersectError::BadSetup(
                "partner fixture is not a neighbor of v'".into(),
            ));
        }
        if joint_rank_signed_graph(&MP_HPOLY, &v, &w)?.rank == 8 {
            return Err(IntersectError::BadSetup(
                "partner fixture is a neighbor of v".into(),
            ));
        }
        let u = streamlined_vertex(&v, &w, &h_v)?;
        let r = certify(&v, &w, u)?;
        if r.certificate.mpbar_tight_rank != 9 {
            return Err(IntersectError::BadSetup(
                "combination is not a vertex of the intersection".into(),
            ));
        }
        out.push(r);
    }
    Ok(out)
}

/// The discovery sweep behind the reconstruction: every vertex of the
/// intersection generated at the canonical violator, i.e. every partner w
/// among the neighbors of v' that are not neighbors of v whose combination
/// has full tight rank. The four reconstructed families appear among
/// these. Results are sorted by coordinates.
pub fn streamlined_candidates() -> Result<Vec<ReconstructedVertex>, IntersectError> {
    let verts = &*MP_VERTICES;
    let v = vertex_v();
    let vp = vertex_v_prime();
    let h_v = phi_inverse(&v)?;
    let nv: BTreeSet<usize> = neighbors(&MP_HPOLY, verts, &v)?.into_iter().collect();
    let nvp: BTreeSet<usize> = neighbors(&MP_HPOLY, verts, &vp)?.into_iter().collect();
    let v_idx = vertex_index(verts, &v).expect("v is a vertex");
    let mut out = Vec::new();
    for &w_idx in nvp.difference(&nv) {
        if w_idx == v_idx {
            continue;
        }
        let w = &verts[w_idx];
        let u = streamlined_vertex(&v, w, &h_v)?;
        if tight_set(&MPBAR_HPOLY, &u.coords.0).is_err() {
            continue;
        }
        let r = certify(&v, w, u)?;
        if r.certificate.mpbar_tight_rank != 9 {
            continue;
        }
        out.push(r);
    }
    out.sort_by(|a, b| a.streamlined.coords.cmp(&b.streamlined.coords));
    Ok(out)
}
