//! Small exact linear-algebra helpers: integer matrices for Weyl elements and
//! weight maps, rational elimination for inverses and ranks, and an integer
//! kernel basis via unimodular column reduction.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub fn identity_i64(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn mat_vec_i64(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Gauss–Jordan inverse of a square rational matrix.
pub fn invert_rational(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut work: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        for j in 0..n {
            work[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for j in 0..n {
                    let w = &f * &work[col][j];
                    work[r][j] -= w;
                    let v = &f * &inv[col][j];
                    inv[r][j] -= v;
                }
            }
        }
    }
    Some(inv)
}

/// Rank of an integer matrix via rational elimination.
pub fn integer_row_rank(m: &[Vec<i64>]) -> usize {
    let mut work: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| crate::rational::rat_int(x)).collect())
        .collect();
    let rows = work.len();
    let cols = work.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        if let Some(piv) = (rank..rows).find(|&r| !work[r][col].is_zero()) {
            work.swap(rank, piv);
            let p = work[rank][col].clone();
            for r in rank + 1..rows {
                if !work[r][col].is_zero() {
                    let f = &work[r][col] / &p;
                    for c in col..cols {
                        let delta = &f * &work[rank][c];
                        work[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

/// Basis of the integer kernel {v : M v = 0} of an integer matrix, found by
/// unimodular column operations (column-style Hermite reduction). The basis
/// spans the full kernel lattice because the transformation is invertible
/// over the integers.
pub fn integer_kernel(m: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let rows = m.len();
    let mut work: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    // u tracks the column operations; column j of u expresses the current
    // column j in terms of the original basis.
    let mut u: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();

    let col_op_sub =
        |work: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
            for row in work.iter_mut() {
                row[dst] -= q * row[src];
            }
            for row in u.iter_mut() {
                row[dst] -= q * row[src];
            }
        };
    let col_swap = |work: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, a: usize, b: usize| {
        for row in work.iter_mut() {
            row.swap(a, b);
        }
        for row in u.iter_mut() {
            row.swap(a, b);
        }
    };

    let mut lead = 0;
    for r in 0..rows {
        if lead >= cols {
            break;
        }
        // Euclidean reduction across the active columns of row r.
        loop {
            let mut best: Option<usize> = None;
            for c in lead..cols {
                if work[r][c] != 0 {
                    best = match best {
                        None => Some(c),
                        Some(b) if work[r][c].abs() < work[r][b].abs() => Some(c),
                        other => other,
                    };
                }
            }
            let Some(b) = best else { break };
            col_swap(&mut work, &mut u, lead, b);
            let pivot = work[r][lead];
            let mut done = true;
            for c in lead + 1..cols {
                if work[r][c] != 0 {
                    let q = work[r][c].div_euclid(pivot);
                    col_op_sub(&mut work, &mut u, c, lead, q);
                    if work[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                lead += 1;
                break;
            }
        }
    }

    let mut basis = Vec::new();
    for c in 0..cols {
        if (0..rows).all(|r| work[r][c] == 0) {
            let mut v: Vec<i64> = u
                .iter()
                .map(|row| i64::try_from(row[c]).expect("kernel basis entry overflows i64"))
                .collect();
            if v.iter().find(|&&x| x != 0).map(|&x| x < 0).unwrap_or(false) {
                for x in v.iter_mut() {
                    *x = -*x;
                }
            }
            basis.push(v);
        }
    }
    basis.sort();
    basis
}
