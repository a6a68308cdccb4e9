use crate::error::IntersectError;
use crate::streamline::{streamlined_vertex, StreamlinedVertex};
use exact_polytope::{clear_denominators, enumerate_vertices_with_order, DdPair, Int};
use mermin_poly::{
    nn_rows, phi_inverse, vertex_v, w_vertices, CHSH_FAMILY, MPBAR_HPOLY, MP_HPOLY, MP_VERTICES,
};
use pauli_core::{enumerate_stabilizer_groups, g_group, orbit, Tableau};
use std::collections::{BTreeSet, HashMap};

/// Full vertex set of the 114-row intersection, seeded from the known
/// vertex description of the 24-row system: the outcome-bound rows go in
/// first (they cut nothing), then the CHSH rows by fewest violations.
pub fn mpbar_vertices() -> Result<Vec<Tableau>, IntersectError> {
    let rays: Vec<Vec<Int>> = MP_VERTICES
        .iter()
        .map(|v| clear_denominators(&v.coords.0))
        .collect();
    let mut pair = DdPair::from_vrep(&MP_HPOLY, &rays)?;
    for row in nn_rows() {
        pair.insert_row(&row)?;
    }
    let mut remaining: Vec<Vec<Int>> = CHSH_FAMILY.iter().map(|h| h.row.clone()).collect();
    while !remaining.is_empty() {
        let best = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| pair.count_violations(r))
            .map(|(i, _)| i)
            .unwrap();
        let row = remaining.swap_remove(best);
        pair.insert_row(&row)?;
    }
    Ok(pair.vertices()?.into_iter().map(Tableau).collect())
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// The same vertex set computed from scratch under a seeded random
/// insertion order of all 114 rows, for order-independence checks.
pub fn mpbar_vertices_with_seed(seed: u64) -> Result<Vec<Tableau>, IntersectError> {
    let n = MPBAR_HPOLY.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        let j = (splitmix64(&mut s) % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    Ok(enumerate_vertices_with_order(&MPBAR_HPOLY, &order)?
        .into_iter()
        .map(Tableau)
        .collect())
}

/// The four streamlined vertices at the canonical violator, built from the
/// frozen partner fixtures.
pub fn canonical_streamlined() -> Result<Vec<StreamlinedVertex>, IntersectError> {
    let v = vertex_v();
    let h_v = phi_inverse(&v)?;
    w_vertices()
        .iter()
        .map(|w| streamlined_vertex(&v, w, &h_v))
        .collect()
}

/// One G-orbit of intersection vertices. Ids are positional after sorting
/// all classes by (size, representative); the representative is the
/// lexicographically smallest member.
#[derive(Clone, Debug)]
pub struct OrbitClass {
    pub id: usize,
    pub size: usize,
    pub representative: Tableau,
    pub members: Vec<usize>,
    /// True when the class is exactly the projected nonlocal stabilizer states.
    pub is_tau3: bool,
    /// Which of the four streamlined vertices land in this class.
    pub contains_ui: Vec<usize>,
    /// How many members are vertices of the 24-row system of triple type.
    pub t1bar_members: usize,
}

pub struct OrbitTable {
    pub vertices: Vec<Tableau>,
    pub classes: Vec<OrbitClass>,
}

/// Partitions the intersection vertices into orbits of the order-1152
/// symmetry group and annotates each class.
pub fn classify_mpbar_orbits() -> Result<OrbitTable, IntersectError> {
    let vertices = crate::MPBAR_VERTICES.clone();
    let index: HashMap<&Tableau, usize> = vertices.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let group = g_group();
    let mut assigned = vec![false; vertices.len()];
    let mut raw: Vec<(Tableau, Vec<usize>)> = Vec::new();
    for i in 0..vertices.len() {
        if assigned[i] {
            continue;
        }
        let orb = orbit(group, &vertices[i])?;
        let mut members = Vec::with_capacity(orb.len());
        for t in &orb {
            let &j = index.get(t).ok_or_else(|| {
                IntersectError::BadSetup("orbit leaves the vertex set".into())
            })?;
            assigned[j] = true;
            members.push(j);
        }
        raw.push((orb[0].clone(), members));
    }
    raw.sort_by(|a, b| (a.1.len(), &a.0).cmp(&(b.1.len(), &b.0)));

    let u: Vec<Tableau> = canonical_streamlined()?
        .into_iter()
        .map(|s| s.coords)
        .collect();
    let tau3: BTreeSet<Tableau> = enumerate_stabilizer_groups()
        .iter()
        .filter(|s| s.iso.is_nonlocal())
        .map(|s| s.state_tableau().project_nonlocal())
        .collect::<Result<_, _>>()?;
    let t1: BTreeSet<Tableau> = MP_VERTICES
        .iter()
        .filter(|v| v.is_type1())
        .map(|v| v.coords.clone())
        .collect();

    let classes = raw
        .into_iter()
        .enumerate()
        .map(|(id, (representative, members))| {
            let member_tabs: BTreeSet<Tableau> =
                members.iter().map(|&j| vertices[j].clone()).collect();
            let is_tau3 = member_tabs == tau3;
            let contains_ui = u
                .iter()
                .enumerate()
                .filter(|(_, t)| member_tabs.contains(*t))
                .map(|(k, _)| k)
                .collect();
            let t1bar_members = member_tabs.intersection(&t1).count();
            OrbitClass {
                id,
                size: members.len(),
                representative,
                members,
                is_tau3,
                contains_ui,
                t1bar_members,
            }
        })
        .collect();
    Ok(OrbitTable { vertices, classes })
}
