//! Exact dense linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Rat>>`. Everything here is plain Gaussian
//! elimination; the sizes in this library stay small (ambient dimension at
//! most a few dozen), so no fraction-free tricks are needed.

use num::{One, Signed, Zero};

use crate::rat::Rat;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in 0..ncols {
                    let t = &rows[rank][c] * &factor;
                    rows[i][c] -= t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Basis of the right kernel `{x : r · x = 0 for every row r}` in `R^n`.
pub fn nullspace(rows: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let (rr, pivots) = rref(rows.to_vec());
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in (0..n).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (row, &p) in rr.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "det needs a square matrix");
    let mut a = m.to_vec();
    let mut result = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            result = -result;
        }
        result *= &a[col][col];
        let inv = a[col][col].recip();
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = &a[i][col] * &inv;
            for c in col..n {
                let t = &a[col][c] * &factor;
                a[i][c] -= t;
            }
        }
    }
    result
}

pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !aug[i][col].is_zero() {
                let factor = aug[i][col].clone();
                for c in 0..2 * n {
                    let t = &aug[col][c] * &factor;
                    aug[i][c] -= t;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (n, k) = (a.len(), b.len());
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        assert_eq!(a[i].len(), k, "inner dimensions must agree");
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let t = &a[i][l] * &brow[j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn mat_vec(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), x.len(), "inner dimensions must agree");
            row.iter().zip(x).map(|(r, v)| r * v).sum()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Coefficients `x` with `sum x_i cols_i = b`, or None when inconsistent.
/// Free coordinates, if any, are set to zero.
pub fn solve_columns(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = b.len();
    assert!(cols.iter().all(|c| c.len() == n), "column length mismatch");
    let k = cols.len();
    let aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let (rr, pivots) = rref(aug);
    if pivots.contains(&k) {
        return None; // pivot in the augmented column: inconsistent system
    }
    let mut x = vec![Rat::zero(); k];
    for (row, &p) in rr.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// True when every entry of `v` is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn scale_vec(v: &[Rat], s: &Rat) -> Vec<Rat> {
    v.iter().map(|x| x * s).collect()
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the largest absolute entry, preserving signs.
pub fn normalize_functional(v: &[Rat]) -> Vec<Rat> {
    let Some(max) = v.iter().filter(|x| !x.is_zero()).max_by(|a, b| a.abs().cmp(&b.abs())) else {
        return v.to_vec();
    };
    let max = max.abs();
    v.iter().map(|x| x / &max).collect()
}
