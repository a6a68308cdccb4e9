use crate::error::IntersectError;
use exact_polytope::{HPoly, Rat};
use mermin_poly::{
    chsh_family, clbar_hpoly, joint_rank_signed_graph, mp_vertices, pairing_value, phi_dual,
    phi_inverse, vertex_index, ChshInequality, MerminVertex, MP_HPOLY,
};
use num_traits::Zero;
use std::ops::Range;

/// The two polytopes of the streamlined intersection step: the Mermin
/// polytope by its vertices and the projected classical polytope by its
/// facet rows, with the marked subsets tied together by the duality map.
pub struct IntersectionSetup {
    /// V1: the 120 Mermin polytope vertices.
    pub p1_vertices: Vec<MerminVertex>,
    /// V1': positions of the 72 apex-type vertices inside p1_vertices.
    pub apex_indices: Vec<usize>,
    /// H2: the 18 outcome-bound rows followed by the 72 CHSH rows.
    pub p2_rows: HPoly,
    /// H2': the CHSH block inside p2_rows.
    pub chsh_row_range: Range<usize>,
    /// Structured form of the H2' rows, aligned with chsh_row_range.
    pub chsh: Vec<ChshInequality>,
    /// duality[k] = position in p1_vertices of the dual vertex of chsh[k].
    pub duality: Vec<usize>,
}

pub fn intersection_setup() -> Result<IntersectionSetup, IntersectError> {
    let p1_vertices = mp_vertices();
    let apex_indices: Vec<usize> = p1_vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_type2())
        .map(|(i, _)| i)
        .collect();
    let p2_rows = clbar_hpoly();
    let chsh = chsh_family();
    let chsh_row_range = (p2_rows.nrows() - chsh.len())..p2_rows.nrows();
    for (k, h) in chsh.iter().enumerate() {
        if p2_rows.row(chsh_row_range.start + k) != h.row.as_slice() {
            return Err(IntersectError::BadSetup(format!(
                "CHSH row {k} disagrees with the facet block"
            )));
        }
    }
    let mut duality = Vec::with_capacity(chsh.len());
    for h in &chsh {
        let v = phi_dual(h);
        let idx = vertex_index(&p1_vertices, &v).ok_or_else(|| {
            IntersectError::BadSetup("dual vertex missing from the vertex list".into())
        })?;
        duality.push(idx);
    }
    let mut image = duality.clone();
    image.sort_unstable();
    image.dedup();
    if image != apex_indices {
        return Err(IntersectError::BadSetup(
            "duality is not a bijection onto the apex vertices".into(),
        ));
    }
    Ok(IntersectionSetup {
        p1_vertices,
        apex_indices,
        p2_rows,
        chsh_row_range,
        chsh,
        duality,
    })
}

/// Outcome of checking the three hypotheses of the streamlined DD step.
pub struct ConditionReport {
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    /// Per CHSH row: the unique violating vertex and its value.
    pub violators: Vec<(usize, Rat)>,
    /// Extremes of the cross and self pairing products over the checked
    /// non-neighbor apex pairs.
    pub min_cross_product: Option<Rat>,
    pub max_self_product: Option<Rat>,
    pub nonneighbor_pairs: usize,
    pub failures: Vec<String>,
}

impl ConditionReport {
    pub fn pass(&self) -> bool {
        self.condition1 && self.condition2 && self.condition3
    }
}

/// Checks the three conditions on the setup: (1) every marked facet has a
/// unique violating vertex (its dual) and the unmarked rows cut nothing;
/// (2) the unmarked vertices satisfy every facet; (3) for non-neighbor
/// marked vertices the cross pairing product dominates the self product.
pub fn verify_conditions(setup: &IntersectionSetup) -> Result<ConditionReport, IntersectError> {
    let mut failures = Vec::new();
    let zero = Rat::zero();

    let mut condition1 = true;
    let mut violators = Vec::with_capacity(setup.chsh.len());
    for (k, h) in setup.chsh.iter().enumerate() {
        let mut below: Vec<(usize, Rat)> = Vec::new();
        for (i, v) in setup.p1_vertices.iter().enumerate() {
            let val = pairing_value(h, v);
            if val < zero {
                below.push((i, val));
            }
        }
        if below.len() != 1 || below[0].0 != setup.duality[k] {
            condition1 = false;
            failures.push(format!(
                "facet {k} has violators {:?}, expected exactly its dual {}",
                below.iter().map(|(i, _)| *i).collect::<Vec<_>>(),
                setup.duality[k]
            ));
            continue;
        }
        violators.push(below.pop().unwrap());
    }
    for i in 0..setup.p2_rows.nrows() {
        if setup.chsh_row_range.contains(&i) {
            continue;
        }
        for (j, v) in setup.p1_vertices.iter().enumerate() {
            if v.coords.dot_row(setup.p2_rows.row(i)) < zero {
                condition1 = false;
                failures.push(format!("outcome-bound row {i} cuts vertex {j}"));
            }
        }
    }

    let mut condition2 = true;
    for (j, v) in setup.p1_vertices.iter().enumerate() {
        if v.is_type2() {
            continue;
        }
        for i in 0..setup.p2_rows.nrows() {
            if v.coords.dot_row(setup.p2_rows.row(i)) < zero {
                condition2 = false;
                failures.push(format!("row {i} cuts unmarked vertex {j}"));
            }
        }
    }

    let mut condition3 = true;
    let mut min_cross: Option<Rat> = None;
    let mut max_self: Option<Rat> = None;
    let mut nonneighbor_pairs = 0usize;
    let duals: Vec<ChshInequality> = setup
        .apex_indices
        .iter()
        .map(|&i| phi_inverse(&setup.p1_vertices[i]))
        .collect::<Result<_, _>>()?;
    for (a, &i) in setup.apex_indices.iter().enumerate() {
        let v = &setup.p1_vertices[i];
        for (b, &j) in setup.apex_indices.iter().enumerate().skip(a + 1) {
            let w = &setup.p1_vertices[j];
            if joint_rank_signed_graph(&MP_HPOLY, v, w)?.rank == 8 {
                continue;
            }
            nonneighbor_pairs += 1;
            let cross = pairing_value(&duals[a], w) * pairing_value(&duals[b], v);
            let selfp = pairing_value(&duals[a], v) * pairing_value(&duals[b], w);
            if cross < selfp {
                condition3 = false;
                failures.push(format!(
                    "pair ({i}, {j}) has cross product {cross} below self product {selfp}"
                ));
            }
            if min_cross.as_ref().is_none_or(|m| cross < *m) {
                min_cross = Some(cross);
            }
            if max_self.as_ref().is_none_or(|m| selfp > *m) {
                max_self = Some(selfp);
            }
        }
    }

    Ok(ConditionReport {
        condition1,
        condition2,
        condition3,
        violators,
        min_cross_product: min_cross,
        max_self_product: max_self,
        nonneighbor_pairs,
        failures,
    })
}
