use crate::error::PolyError;
use crate::rank::{exact_rank, reduce_by_gcd};
use crate::{Int, Rat, MAX_ROWS};
use num_traits::{Signed, Zero};
use std::collections::HashSet;

/// An H-description: integer rows h with h . x >= 0 for homogenized x.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HPoly {
    dim: usize,
    rows: Vec<Vec<Int>>,
}

impl HPoly {
    /// Rows are gcd-reduced on ingest; zero rows are rejected.
    pub fn new(dim: usize, rows: Vec<Vec<Int>>) -> Result<Self, PolyError> {
        let mut stored = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(PolyError::RowLength {
                    row: i,
                    got: row.len(),
                    expected: dim,
                });
            }
            if row.iter().all(|v| v.is_zero()) {
                return Err(PolyError::ZeroRow(i));
            }
            stored.push(reduce_by_gcd(row));
        }
        Ok(HPoly { dim, rows: stored })
    }

    pub fn from_i64_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self, PolyError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect();
        HPoly::new(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.rows[i]
    }

    /// Exact value of row i at a rational point.
    pub fn value(&self, i: usize, x: &[Rat]) -> Rat {
        dot_int_rat(&self.rows[i], x)
    }
}

pub(crate) fn dot_int_rat(row: &[Int], x: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (c, v) in row.iter().zip(x.iter()) {
        if !c.is_zero() {
            acc += Rat::from_integer(c.clone()) * v;
        }
    }
    acc
}

/// The set of rows tight at a feasible point, as sorted indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TightSet {
    pub indices: Vec<usize>,
}

impl TightSet {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn intersection(&self, other: &TightSet) -> TightSet {
        let set: HashSet<usize> = other.indices.iter().copied().collect();
        TightSet {
            indices: self
                .indices
                .iter()
                .copied()
                .filter(|i| set.contains(i))
                .collect(),
        }
    }
}

/// Tight rows at x; errors with the first violated row if x is infeasible.
pub fn tight_set(p: &HPoly, x: &[Rat]) -> Result<TightSet, PolyError> {
    if x.len() != p.dim {
        return Err(PolyError::DimensionMismatch(x.len(), p.dim));
    }
    let mut indices = Vec::new();
    for i in 0..p.nrows() {
        let v = p.value(i, x);
        if v.is_negative() {
            return Err(PolyError::Infeasible { row: i });
        }
        if v.is_zero() {
            indices.push(i);
        }
    }
    Ok(TightSet { indices })
}

/// Rank of the tight rows at a single feasible point.
pub fn tight_rank(p: &HPoly, x: &[Rat]) -> Result<usize, PolyError> {
    let t = tight_set(p, x)?;
    let rows: Vec<Vec<Int>> = t.indices.iter().map(|&i| p.rows[i].clone()).collect();
    Ok(exact_rank(&rows))
}

/// Rank of the common tight rows of two feasible points.
pub fn joint_rank(p: &HPoly, x: &[Rat], y: &[Rat]) -> Result<usize, PolyError> {
    let tx = tight_set(p, x)?;
    let ty = tight_set(p, y)?;
    let common = tx.intersection(&ty);
    let rows: Vec<Vec<Int>> = common.indices.iter().map(|&i| p.rows[i].clone()).collect();
    Ok(exact_rank(&rows))
}

/// Concatenates two H-descriptions over the same space, dropping duplicate
/// rows from the second.
pub fn intersect(a: &HPoly, b: &HPoly) -> Result<HPoly, PolyError> {
    if a.dim != b.dim {
        return Err(PolyError::DimensionMismatch(a.dim, b.dim));
    }
    let seen: HashSet<&Vec<Int>> = a.rows.iter().collect();
    let mut rows = a.rows.clone();
    for row in &b.rows {
        if !seen.contains(row) {
            rows.push(row.clone());
        }
    }
    if rows.len() > MAX_ROWS {
        return Err(PolyError::TooManyRows(rows.len(), MAX_ROWS));
    }
    HPoly::new(a.dim, rows)
}
