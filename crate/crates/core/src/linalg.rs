//! Exact rational linear algebra: rank, particular solutions of linear
//! systems, and nonnegative feasibility by a phase-one simplex.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Row-reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
fn rref(rows: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..rows[i].len() {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Some `x` with `a·x = b`, free variables set to zero.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][ncols].clone();
    }
    Some(x)
}

/// Decides whether `target` is a nonnegative combination of `generators`
/// and returns the coefficients when it is.
///
/// Phase one of the simplex method over exact rationals with Bland's rule,
/// so the pivot sequence is deterministic and cannot cycle.
pub fn nonnegative_combination(generators: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let m = target.len();
    let k = generators.len();
    if m == 0 {
        return Some(vec![Q::zero(); k]);
    }
    let width = k + m + 1;
    let mut tab: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row = vec![Q::zero(); width];
            for (j, g) in generators.iter().enumerate() {
                row[j] = g[i].clone();
            }
            row[k + i] = Q::one();
            row[width - 1] = target[i].clone();
            if row[width - 1].is_negative() {
                for (j, x) in row.iter_mut().enumerate() {
                    if j != k + i {
                        *x = -x.clone();
                    }
                }
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut obj = vec![Q::zero(); width];
    for row in &tab {
        for j in 0..width {
            if j < k || j == width - 1 {
                obj[j] -= &row[j];
            }
        }
    }
    loop {
        let Some(enter) = (0..k + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave?;
        let inv = tab[r][enter].recip();
        for x in tab[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..width {
                    let d = &f * &tab[r][j];
                    tab[i][j] -= d;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..width {
                obj[j] -= &f * &tab[r][j];
            }
        }
        basis[r] = enter;
    }
    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut coeffs = vec![Q::zero(); k];
    for (i, &b) in basis.iter().enumerate() {
        if b < k {
            coeffs[b] = tab[i][width - 1].clone();
        }
    }
    Some(coeffs)
}
