//! Integer lattices in Hermite normal form.

use std::fmt;

use crate::error::{Error, Result};

/// A sublattice of `ℤⁿ` stored as the nonzero rows of its Hermite normal
/// form: upper echelon, positive pivots, entries above each pivot reduced
/// into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Row-style HNF of `rows` together with a unimodular `u` such that the
/// returned rows are the first rows of `u · rows`.
fn hnf_with_transform(n: usize, rows: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<usize>, Vec<Vec<i128>>) {
    let m = rows.len();
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..m)
        .map(|i| (0..m).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c among rows r..
            let Some(p) = (r..m)
                .filter(|&i| a[i][c] != 0)
                .min_by_key(|&i| a[i][c].abs())
            else {
                break;
            };
            a.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if a[i][c] != 0 {
                    let q = floor_div(a[i][c], a[r][c]);
                    for k in 0..n {
                        a[i][k] -= q * a[r][k];
                    }
                    for k in 0..m {
                        u[i][k] -= q * u[r][k];
                    }
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            a[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        for i in 0..r {
            let q = floor_div(a[i][c], a[r][c]);
            if q != 0 {
                for k in 0..n {
                    a[i][k] -= q * a[r][k];
                }
                for k in 0..m {
                    u[i][k] -= q * u[r][k];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots, u)
}

impl Lattice {
    /// The lattice spanned by `gens` in `ℤⁿ`.
    pub fn from_generators(n: usize, gens: &[Vec<i64>]) -> Self {
        let (h, pivots, _) = hnf_with_transform(n, gens);
        Lattice {
            n,
            basis: h
                .into_iter()
                .map(|r| r.into_iter().map(|x| x as i64).collect())
                .collect(),
            pivots,
        }
    }

    pub fn standard(n: usize) -> Self {
        let gens: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Lattice::from_generators(n, &gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.n
    }

    /// HNF rows.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Index of the lattice in `ℤⁿ` (product of pivots) when full rank.
    pub fn index(&self) -> Option<i64> {
        self.is_full_rank()
            .then(|| (0..self.n).map(|k| self.basis[k][k]).product())
    }

    /// Integer coefficients `c` with `Σ c_k basis_k = v`, if `v` lies in the
    /// lattice.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        if v.len() != self.n {
            return None;
        }
        let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut coeffs = Vec::with_capacity(self.rank());
        let mut col = 0;
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            while col < p {
                if rest[col] != 0 {
                    return None;
                }
                col += 1;
            }
            let piv = row[p] as i128;
            if rest[p] % piv != 0 {
                return None;
            }
            let c = rest[p] / piv;
            for k in 0..self.n {
                rest[k] -= c * row[k] as i128;
            }
            coeffs.push(c as i64);
            col = p + 1;
        }
        rest.iter().all(|&x| x == 0).then_some(coeffs)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Canonical representative of `v + L` in the box `Π [0, pivot_k)`,
    /// and the lattice vector subtracted. Needs full rank.
    pub fn reduce(&self, v: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
        if !self.is_full_rank() {
            return Err(Error::NotCocompact {
                rank: self.rank(),
                n: self.n,
            });
        }
        let mut out: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut shift = vec![0i128; self.n];
        for k in 0..self.n {
            let row = &self.basis[k];
            let q = floor_div(out[k], row[k] as i128);
            if q != 0 {
                for j in 0..self.n {
                    out[j] -= q * row[j] as i128;
                    shift[j] += q * row[j] as i128;
                }
            }
        }
        Ok((
            out.into_iter().map(|x| x as i64).collect(),
            shift.into_iter().map(|x| x as i64).collect(),
        ))
    }

    /// Lattice vectors inside the inclusive box `[lo, hi]`, in
    /// lexicographic order of their coefficient vectors.
    pub fn points_in_box(&self, lo: &[i64], hi: &[i64]) -> Result<Vec<Vec<i64>>> {
        if !self.is_full_rank() {
            return Err(Error::NotCocompact {
                rank: self.rank(),
                n: self.n,
            });
        }
        let mut out = Vec::new();
        let mut acc = vec![0i64; self.n];
        self.box_rec(0, lo, hi, &mut acc, &mut out);
        Ok(out)
    }

    fn box_rec(&self, k: usize, lo: &[i64], hi: &[i64], acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == self.n {
            out.push(acc.clone());
            return;
        }
        // coordinate k depends only on rows 0..=k; rows > k vanish there
        let piv = self.basis[k][k];
        let base = acc[k];
        let cmin = (lo[k] - base).div_euclid(piv) + i64::from((lo[k] - base).rem_euclid(piv) != 0);
        let cmax = (hi[k] - base).div_euclid(piv);
        for c in cmin..=cmax {
            for j in 0..self.n {
                acc[j] += c * self.basis[k][j];
            }
            self.box_rec(k + 1, lo, hi, acc, out);
            for j in 0..self.n {
                acc[j] -= c * self.basis[k][j];
            }
        }
    }

    /// Image of the lattice under an integer linear map given by its rows
    /// (`map[r]` is the r-th output coordinate as a functional), together
    /// with a way back: for a target in the image, a preimage in the
    /// lattice.
    pub(crate) fn preimage_in(&self, map: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
        let m = map.len();
        let images: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|b| map.iter().map(|f| f.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
            .collect();
        let (h, pivots, u) = hnf_with_transform(m, &images);
        // solve y · h = target by forward elimination on the echelon rows
        let mut rest: Vec<i128> = target.iter().map(|&x| x as i128).collect();
        let mut y = vec![0i128; images.len()];
        for (r, &p) in pivots.iter().enumerate() {
            if rest[..p].iter().any(|&x| x != 0) {
                return None;
            }
            if rest[p] % h[r][p] != 0 {
                return None;
            }
            let c = rest[p] / h[r][p];
            for k in 0..m {
                rest[k] -= c * h[r][k];
            }
            y[r] = c;
        }
        if rest.iter().any(|&x| x != 0) {
            return None;
        }
        // coefficients on the original basis rows
        let mut t = vec![0i128; self.n];
        for (r, &yr) in y.iter().enumerate() {
            if yr == 0 {
                continue;
            }
            for (k, b) in self.basis.iter().enumerate() {
                let c = yr * u[r][k];
                for j in 0..self.n {
                    t[j] += c * b[j] as i128;
                }
            }
        }
        Some(t.into_iter().map(|x| x as i64).collect())
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("({})", s.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
