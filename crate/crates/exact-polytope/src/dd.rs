use crate::error::PolyError;
use crate::hpoly::HPoly;
use crate::rank::{bareiss_rank, clear_denominators, exact_rank, rank_i128, reduce_by_gcd};
use crate::{Int, Rat, MAX_DIM, MAX_ROWS};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::HashSet;

/// An extreme ray of the intermediate cone, with the bitmask of inserted
/// rows tight on it.
#[derive(Clone, Debug)]
pub struct DdRay {
    pub coords: Vec<Int>,
    pub tight: u128,
}

/// A double description pair: the rows inserted so far together with the
/// complete list of extreme rays of the cone they cut out.
#[derive(Clone, Debug)]
pub struct DdPair {
    dim: usize,
    rows: Vec<Vec<Int>>,
    rows_small: Vec<Option<[i64; MAX_DIM]>>,
    rays: Vec<DdRay>,
}

fn dot_int(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn to_small(row: &[Int]) -> Option<[i64; MAX_DIM]> {
    let mut out = [0i64; MAX_DIM];
    for (o, v) in out.iter_mut().zip(row.iter()) {
        *o = i64::try_from(v).ok()?;
    }
    Some(out)
}

/// Inverts a square integer matrix over the rationals, returning its columns.
fn inverse_columns(b: &[Vec<Int>]) -> Result<Vec<Vec<Rat>>, PolyError> {
    let d = b.len();
    let mut aug: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            let mut row: Vec<Rat> = b[i].iter().map(|v| Rat::from_integer(v.clone())).collect();
            for j in 0..d {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d)
            .find(|&i| !aug[i][c].is_zero())
            .ok_or(PolyError::NotPointed { rank: c, dim: d })?;
        aug.swap(c, p);
        let pivot = aug[c][c].clone();
        for v in aug[c].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..d {
            if i == c || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            for j in 0..2 * d {
                let s = &aug[c][j] * &f;
                aug[i][j] -= s;
            }
        }
    }
    Ok((0..d)
        .map(|k| (0..d).map(|i| aug[i][d + k].clone()).collect())
        .collect())
}

impl DdPair {
    /// Seeds the pair from a nonsingular set of rows picked greedily from p,
    /// in row order. Returns the pair and the indices not yet inserted.
    pub fn new_simplicial(p: &HPoly) -> Result<(DdPair, Vec<usize>), PolyError> {
        let d = p.dim();
        if d > MAX_DIM {
            return Err(PolyError::DimensionTooLarge(d, MAX_DIM));
        }
        if p.nrows() > MAX_ROWS {
            return Err(PolyError::TooManyRows(p.nrows(), MAX_ROWS));
        }
        let mut chosen: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for i in 0..p.nrows() {
            if rank == d {
                break;
            }
            let mut rows: Vec<Vec<Int>> = chosen.iter().map(|&j| p.row(j).to_vec()).collect();
            rows.push(p.row(i).to_vec());
            let r = exact_rank(&rows);
            if r > rank {
                chosen.push(i);
                rank = r;
            }
        }
        if rank < d {
            return Err(PolyError::NotPointed { rank, dim: d });
        }
        let basis: Vec<Vec<Int>> = chosen.iter().map(|&j| p.row(j).to_vec()).collect();
        let inv_cols = inverse_columns(&basis)?;
        let mut rays = Vec::with_capacity(d);
        for (k, col) in inv_cols.iter().enumerate() {
            let mut coords = clear_denominators(col);
            if dot_int(&basis[k], &coords).is_negative() {
                for v in coords.iter_mut() {
                    *v = -v.clone();
                }
            }
            let tight = (if d == 128 { u128::MAX } else { (1u128 << d) - 1 }) & !(1u128 << k);
            rays.push(DdRay { coords, tight });
        }
        let rows_small = basis.iter().map(|r| to_small(r)).collect();
        let remaining = (0..p.nrows()).filter(|i| !chosen.contains(i)).collect();
        Ok((
            DdPair {
                dim: d,
                rows: basis,
                rows_small,
                rays,
            },
            remaining,
        ))
    }

    /// Seeds the pair from a known complete vertex description of p. Each ray
    /// must be feasible and extreme for p's rows; the row system must be
    /// pointed.
    pub fn from_vrep(p: &HPoly, rays_in: &[Vec<Int>]) -> Result<DdPair, PolyError> {
        let d = p.dim();
        if d > MAX_DIM {
            return Err(PolyError::DimensionTooLarge(d, MAX_DIM));
        }
        if p.nrows() > MAX_ROWS {
            return Err(PolyError::TooManyRows(p.nrows(), MAX_ROWS));
        }
        let rank_all = exact_rank(p.rows());
        if rank_all < d {
            return Err(PolyError::NotPointed { rank: rank_all, dim: d });
        }
        let mut rays = Vec::with_capacity(rays_in.len());
        for (ri, raw) in rays_in.iter().enumerate() {
            if raw.len() != d {
                return Err(PolyError::RowLength {
                    row: ri,
                    got: raw.len(),
                    expected: d,
                });
            }
            let coords = reduce_by_gcd(raw.clone());
            let mut tight = 0u128;
            let mut tight_rows: Vec<Vec<Int>> = Vec::new();
            for i in 0..p.nrows() {
                let v = dot_int(p.row(i), &coords);
                if v.is_negative() {
                    return Err(PolyError::InvalidVrep(format!(
                        "ray {ri} violates row {i}"
                    )));
                }
                if v.is_zero() {
                    tight |= 1u128 << i;
                    tight_rows.push(p.row(i).to_vec());
                }
            }
            let r = exact_rank(&tight_rows);
            if r != d - 1 {
                return Err(PolyError::InvalidVrep(format!(
                    "ray {ri} has tight rank {r}, expected {}",
                    d - 1
                )));
            }
            rays.push(DdRay { coords, tight });
        }
        let rows_small = p.rows().iter().map(|r| to_small(r)).collect();
        Ok(DdPair {
            dim: d,
            rows: p.rows().to_vec(),
            rows_small,
            rays,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rays(&self) -> &[DdRay] {
        &self.rays
    }

    /// Number of current rays strictly violating a candidate row.
    pub fn count_violations(&self, row: &[Int]) -> usize {
        self.rays
            .par_iter()
            .filter(|r| dot_int(row, &r.coords).is_negative())
            .count()
    }

    fn mask_rank_equals(&self, mask: u128, target: usize) -> bool {
        let mut small: Vec<[i64; MAX_DIM]> = Vec::with_capacity(mask.count_ones() as usize);
        let mut all_small = true;
        for i in 0..self.rows.len() {
            if mask & (1u128 << i) == 0 {
                continue;
            }
            match self.rows_small[i] {
                Some(s) if all_small => small.push(s),
                _ => {
                    all_small = false;
                }
            }
        }
        if all_small {
            if let Some(r) = rank_i128(&small, self.dim, Some(target)) {
                return r == target;
            }
        }
        let mut big: Vec<Vec<Int>> = Vec::new();
        for i in 0..self.rows.len() {
            if mask & (1u128 << i) != 0 {
                big.push(self.rows[i].clone());
            }
        }
        bareiss_rank(&mut big, Some(target)) == target
    }

    /// One double description step: cuts the current cone with row . x >= 0.
    pub fn insert_row(&mut self, row_in: &[Int]) -> Result<(), PolyError> {
        if row_in.len() != self.dim {
            return Err(PolyError::RowLength {
                row: self.rows.len(),
                got: row_in.len(),
                expected: self.dim,
            });
        }
        if self.rows.len() + 1 > MAX_ROWS {
            return Err(PolyError::TooManyRows(self.rows.len() + 1, MAX_ROWS));
        }
        let row = reduce_by_gcd(row_in.to_vec());
        if row.iter().all(|v| v.is_zero()) {
            return Err(PolyError::ZeroRow(self.rows.len()));
        }
        let vals: Vec<Int> = self
            .rays
            .par_iter()
            .map(|r| dot_int(&row, &r.coords))
            .collect();
        let bit = 1u128 << self.rows.len();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if v.is_positive() {
                pos.push(i);
            } else if v.is_negative() {
                neg.push(i);
            }
        }
        if neg.is_empty() {
            for (ray, v) in self.rays.iter_mut().zip(vals.iter()) {
                if v.is_zero() {
                    ray.tight |= bit;
                }
            }
            self.rows_small.push(to_small(&row));
            self.rows.push(row);
            return Ok(());
        }
        let target = self.dim - 2;
        let this: &DdPair = self;
        let vals_ref = &vals;
        let neg_ref = &neg;
        let new_rays: Vec<DdRay> = pos
            .par_iter()
            .flat_map_iter(|&j| {
                let rj = &this.rays[j];
                let vj = &vals_ref[j];
                neg_ref.iter().filter_map(move |&k| {
                    let rk = &this.rays[k];
                    let mask = rj.tight & rk.tight;
                    if (mask.count_ones() as usize) < target {
                        return None;
                    }
                    if !this.mask_rank_equals(mask, target) {
                        return None;
                    }
                    let vk = &vals_ref[k];
                    let coords: Vec<Int> = rj
                        .coords
                        .iter()
                        .zip(rk.coords.iter())
                        .map(|(a, b)| vj * b - vk * a)
                        .collect();
                    Some(DdRay {
                        coords: reduce_by_gcd(coords),
                        tight: mask | bit,
                    })
                })
            })
            .collect();
        let mut seen: HashSet<Vec<Int>> = HashSet::new();
        let mut kept: Vec<DdRay> = Vec::with_capacity(pos.len() + new_rays.len());
        for (i, mut ray) in std::mem::take(&mut self.rays).into_iter().enumerate() {
            if vals[i].is_positive() {
                kept.push(ray);
            } else if vals[i].is_zero() {
                ray.tight |= bit;
                kept.push(ray);
            }
        }
        for ray in new_rays {
            if seen.insert(ray.coords.clone()) {
                kept.push(ray);
            }
        }
        self.rays = kept;
        self.rows_small.push(to_small(&row));
        self.rows.push(row);
        Ok(())
    }

    /// Dehomogenizes all rays to vertices. Errors if any ray lies at infinity.
    pub fn vertices(&self) -> Result<Vec<Vec<Rat>>, PolyError> {
        let mut out: Vec<Vec<Rat>> = Vec::with_capacity(self.rays.len());
        for ray in &self.rays {
            let x0 = &ray.coords[0];
            if !x0.is_positive() {
                return Err(PolyError::Unbounded);
            }
            out.push(
                ray.coords
                    .iter()
                    .map(|c| Rat::new(c.clone(), x0.clone()))
                    .collect(),
            );
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// Pure form of DdPair::insert_row.
pub fn dd_step(pair: &DdPair, row: &[Int]) -> Result<DdPair, PolyError> {
    let mut next = pair.clone();
    next.insert_row(row)?;
    Ok(next)
}

/// Vertex enumeration with a dynamic insertion heuristic: after seeding a
/// simplicial basis, the row violating the fewest current rays goes next.
pub fn enumerate_vertices(p: &HPoly) -> Result<Vec<Vec<Rat>>, PolyError> {
    let (mut pair, mut remaining) = DdPair::new_simplicial(p)?;
    while !remaining.is_empty() {
        let counts: Vec<usize> = remaining
            .iter()
            .map(|&ri| pair.count_violations(p.row(ri)))
            .collect();
        let best = counts
            .iter()
            .enumerate()
            .min_by_key(|(_, &c)| c)
            .map(|(i, _)| i)
            .unwrap();
        let ri = remaining.remove(best);
        pair.insert_row(p.row(ri))?;
    }
    pair.vertices()
}

/// Vertex enumeration inserting rows exactly in the given order (a
/// permutation of all row indices). The simplicial seed takes the first
/// independent rows encountered along the order.
pub fn enumerate_vertices_with_order(
    p: &HPoly,
    order: &[usize],
) -> Result<Vec<Vec<Rat>>, PolyError> {
    let m = p.nrows();
    if order.len() != m {
        return Err(PolyError::BadOrder(format!(
            "order has {} entries, expected {m}",
            order.len()
        )));
    }
    let mut seen = vec![false; m];
    for &i in order {
        if i >= m || seen[i] {
            return Err(PolyError::BadOrder(format!("index {i} repeated or out of range")));
        }
        seen[i] = true;
    }
    let permuted: Vec<Vec<Int>> = order.iter().map(|&i| p.row(i).to_vec()).collect();
    let shuffled = HPoly::new(p.dim(), permuted)?;
    let (mut pair, remaining) = DdPair::new_simplicial(&shuffled)?;
    for ri in remaining {
        pair.insert_row(shuffled.row(ri))?;
    }
    pair.vertices()
}
