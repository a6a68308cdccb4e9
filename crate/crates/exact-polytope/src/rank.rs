use crate::{Int, Rat, MAX_DIM};
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn exact_rank(rows: &[Vec<Int>]) -> usize {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    bareiss_rank(&mut m, None)
}

/// Rank of a rational matrix; each row is scaled to integers first.
pub fn exact_rank_rat(rows: &[Vec<Rat>]) -> usize {
    let cleared: Vec<Vec<Int>> = rows.iter().map(|r| clear_denominators(r)).collect();
    exact_rank(&cleared)
}

/// Scales a rational row by the lcm of denominators, then reduces by the gcd.
pub fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for v in row {
        lcm = num_integer::lcm(lcm, v.denom().clone());
    }
    let ints: Vec<Int> = row
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    reduce_by_gcd(ints)
}

/// Divides the row by the gcd of its entries, preserving signs. Zero rows
/// pass through unchanged.
pub fn reduce_by_gcd(mut row: Vec<Int>) -> Vec<Int> {
    let mut g = Int::zero();
    for v in &row {
        g = num_integer::gcd(g, v.abs());
        if g.is_one() {
            return row;
        }
    }
    if g.is_zero() || g.is_one() {
        return row;
    }
    for v in row.iter_mut() {
        *v /= &g;
    }
    row
}

/// Bareiss elimination computing the rank in place. With stop = Some(k) the
/// scan exits as soon as k pivots are found.
pub fn bareiss_rank(m: &mut [Vec<Int>], stop: Option<usize>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = Int::one();
    for c in 0..ncols {
        if rank == nrows || stop.is_some_and(|k| rank >= k) {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in (rank + 1)..nrows {
            if m[i][c].is_zero() {
                // The row still needs rescaling to keep later divisions exact.
                for j in (c + 1)..ncols {
                    let num = &m[rank][c] * &m[i][j];
                    m[i][j] = &num / &prev;
                }
            } else {
                for j in (c + 1)..ncols {
                    let num = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                    m[i][j] = &num / &prev;
                }
                m[i][c] = Int::zero();
            }
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over the rationals: leading entries 1, zeros
/// above and below each pivot, zero rows dropped.
pub fn rref_rat(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return m;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for v in m[rank].iter_mut() {
            *v = &*v / &pivot;
        }
        let prow = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v = &*v - &f * pv;
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

/// Fraction-free rank over i128 with overflow checking. Returns None when an
/// intermediate product would overflow; callers fall back to big integers.
pub(crate) fn rank_i128(rows: &[[i64; MAX_DIM]], ncols: usize, stop: Option<usize>) -> Option<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Some(0);
    }
    let mut m: Vec<[i128; MAX_DIM]> = rows
        .iter()
        .map(|r| {
            let mut out = [0i128; MAX_DIM];
            for (o, &v) in out.iter_mut().zip(r.iter()) {
                *o = v as i128;
            }
            out
        })
        .collect();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for c in 0..ncols {
        if rank == nrows || stop.is_some_and(|k| rank >= k) {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[c];
        for row in tail.iter_mut() {
            let lead = row[c];
            for j in (c + 1)..ncols {
                let a = pivot.checked_mul(row[j])?;
                let b = lead.checked_mul(pivot_row[j])?;
                row[j] = a.checked_sub(b)? / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}
