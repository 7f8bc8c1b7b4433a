//! The directed line `Ξ` and its powers `Ξⁿ`.
//!
//! An m-simplex of `Ξⁿ` is a sequence of `m + 1` lattice points, weakly
//! increasing in every coordinate, whose last point exceeds the first by a
//! 0/1 vector. It is nondegenerate exactly when consecutive points differ,
//! i.e. when the per-factor degeneracy sets have empty intersection. The
//! nondegenerate cells are therefore strictly increasing chains inside a
//! unit cube, which is what [`XiCell`] stores.

use std::fmt;

use super::{CellId, SimplicialSet, Simplex, Window};
use crate::error::{Error, Result};
use crate::rational::{floor_i64, Q};

/// A nondegenerate simplex of `Ξⁿ`: a strictly increasing chain of lattice
/// points inside one unit cube.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XiCell {
    vertices: Vec<Vec<i64>>,
}

impl XiCell {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::InvalidCell("empty chain".into()));
        };
        let n = first.len();
        for w in vertices.windows(2) {
            if w[1].len() != n {
                return Err(Error::InvalidCell("chain vertices of different arity".into()));
            }
            if w[0] == w[1] || w[0].iter().zip(&w[1]).any(|(a, b)| b < a) {
                return Err(Error::InvalidCell(format!(
                    "chain is not strictly increasing at {:?} -> {:?}",
                    w[0], w[1]
                )));
            }
        }
        let last = vertices.last().unwrap();
        if first.iter().zip(last).any(|(a, b)| b - a > 1) {
            return Err(Error::InvalidCell("chain leaves its unit cube".into()));
        }
        Ok(XiCell { vertices })
    }

    pub fn vertex(v: Vec<i64>) -> Self {
        XiCell { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn base(&self) -> &[i64] {
        &self.vertices[0]
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn arity(&self) -> usize {
        self.vertices[0].len()
    }

    /// Removes vertex `i`.
    pub fn face(&self, i: usize) -> XiCell {
        let mut vertices = self.vertices.clone();
        vertices.remove(i);
        XiCell { vertices }
    }

    pub fn map_vertices(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> XiCell {
        XiCell {
            vertices: self.vertices.iter().map(|v| f(v)).collect(),
        }
    }

    pub fn translate(&self, t: &[i64]) -> XiCell {
        self.map_vertices(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
    }

    /// The cell seen as a tuple of factor simplices of `Ξ`: for each
    /// coordinate, the factor cell (vertex or edge) and its degeneracy word.
    pub fn factors(&self) -> Vec<Simplex> {
        (0..self.arity())
            .map(|c| {
                let seq: Vec<Vec<i64>> = self.vertices.iter().map(|v| vec![v[c]]).collect();
                simplex_from_sequence(&seq).expect("factor of a chain is a chain")
            })
            .collect()
    }
}

impl fmt::Display for XiCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x")?;
        for v in &self.vertices {
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

/// Converts a weakly increasing sequence of lattice points into its
/// normal-form simplex.
pub(crate) fn simplex_from_sequence(seq: &[Vec<i64>]) -> Result<Simplex> {
    let mut deg_word: Vec<usize> = (0..seq.len().saturating_sub(1))
        .filter(|&k| seq[k] == seq[k + 1])
        .collect();
    deg_word.reverse();
    let mut chain = seq.to_vec();
    chain.dedup();
    let cell = XiCell::new(chain)?;
    Ok(Simplex {
        cell_dim: cell.dim(),
        cell: CellId::Xi(cell),
        deg_word,
    })
}

/// Vertex sequence of a simplex of `Ξⁿ`.
pub(crate) fn sequence_of(x: &Simplex) -> Option<Vec<Vec<i64>>> {
    let CellId::Xi(c) = &x.cell else {
        return None;
    };
    Some(x.surjection().iter().map(|&k| c.vertices[k].clone()).collect())
}

/// The rule-based presentation `Ξⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiPower {
    pub n: usize,
}

impl XiPower {
    pub fn new(n: usize) -> Self {
        XiPower { n }
    }

    fn xi_cell<'a>(&self, cell: &'a CellId) -> Result<&'a XiCell> {
        match cell {
            CellId::Xi(c) if c.arity() == self.n => Ok(c),
            _ => Err(Error::UnknownCell(cell.to_string())),
        }
    }

    /// Chains based at `base` using only the coordinates in `free`, with
    /// exactly `dim` steps.
    fn chains_from(&self, base: &[i64], free: &[usize], dim: usize, out: &mut Vec<CellId>) {
        fn rec(
            cur: &mut Vec<Vec<i64>>,
            free: &[usize],
            used: u64,
            left: usize,
            out: &mut Vec<CellId>,
        ) {
            if left == 0 {
                out.push(CellId::Xi(XiCell {
                    vertices: cur.clone(),
                }));
                return;
            }
            let avail: Vec<usize> = free.iter().copied().filter(|&c| used & (1 << c) == 0).collect();
            if avail.len() < left {
                return;
            }
            // nonempty subsets of the still-available coordinates
            for mask in 1u64..(1 << avail.len()) {
                let mut next = cur.last().unwrap().clone();
                let mut u = used;
                for (b, &c) in avail.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        next[c] += 1;
                        u |= 1 << c;
                    }
                }
                cur.push(next);
                rec(cur, free, u, left - 1, out);
                cur.pop();
            }
        }
        let mut cur = vec![base.to_vec()];
        rec(&mut cur, free, 0, dim, out);
    }

    /// Raw location of a point of `ℝⁿ`: the n-simplex stepping through the
    /// coordinates in decreasing order of fractional part, and its
    /// coordinates in `∇[n]`. The result is generally not canonical.
    pub fn locate(&self, p: &[Q]) -> Result<(Simplex, Vec<Q>)> {
        if p.len() != self.n {
            return Err(Error::dims("point arity", self.n, p.len()));
        }
        let base: Vec<i64> = p.iter().map(floor_i64).collect();
        let frac: Vec<Q> = p
            .iter()
            .zip(&base)
            .map(|(x, b)| x - Q::from_integer((*b).into()))
            .collect();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| frac[b].cmp(&frac[a]).then(a.cmp(&b)));
        let mut vertices = vec![base.clone()];
        for &c in &order {
            let mut v = vertices.last().unwrap().clone();
            v[c] += 1;
            vertices.push(v);
        }
        let t = order.iter().map(|&c| frac[c].clone()).collect();
        let cell = XiCell { vertices };
        Ok((Simplex::nondegenerate(CellId::Xi(cell), self.n), t))
    }
}

impl SimplicialSet for XiPower {
    fn cell_dim(&self, cell: &CellId) -> Result<usize> {
        Ok(self.xi_cell(cell)?.dim())
    }

    fn cell_face(&self, cell: &CellId, i: usize) -> Result<Simplex> {
        let c = self.xi_cell(cell)?;
        if c.dim() == 0 || i > c.dim() {
            return Err(Error::IndexOutOfRange {
                op: "face",
                index: i,
                dim: c.dim(),
            });
        }
        let f = c.face(i);
        Ok(Simplex::nondegenerate(CellId::Xi(f), c.dim() - 1))
    }

    fn cells(&self, dim: usize, window: Option<&Window>) -> Result<Vec<CellId>> {
        let w = window.ok_or(Error::WindowRequired)?;
        if w.arity() != self.n {
            return Err(Error::dims("window arity", self.n, w.arity()));
        }
        if dim > self.n {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut base = w.lo.clone();
        if w.lo.iter().zip(&w.hi).any(|(l, h)| l > h) {
            return Ok(out);
        }
        loop {
            let free: Vec<usize> = (0..self.n).filter(|&c| base[c] < w.hi[c]).collect();
            self.chains_from(&base, &free, dim, &mut out);
            // odometer over the window
            let mut c = 0;
            loop {
                if c == self.n {
                    out.sort();
                    return Ok(out);
                }
                if base[c] < w.hi[c] {
                    base[c] += 1;
                    break;
                }
                base[c] = w.lo[c];
                c += 1;
            }
        }
    }

    fn is_finite(&self) -> bool {
        self.n == 0
    }

    fn max_cell_dim(&self) -> usize {
        self.n
    }

    fn coord_arity(&self) -> usize {
        self.n
    }

    fn realize(&self, x: &Simplex, t: &[Q]) -> Option<Vec<Q>> {
        let c = self.xi_cell(&x.cell).ok()?;
        let mut t = t.to_vec();
        for &j in &x.deg_word {
            t.remove(j);
        }
        let mut p: Vec<Q> = c.vertices[0].iter().map(|&v| Q::from_integer(v.into())).collect();
        for (j, tj) in t.iter().enumerate() {
            for (k, pk) in p.iter_mut().enumerate() {
                let step = c.vertices[j + 1][k] - c.vertices[j][k];
                if step != 0 {
                    *pk += tj * Q::from_integer(step.into());
                }
            }
        }
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn xi(vs: &[&[i64]]) -> CellId {
        CellId::Xi(XiCell::new(vs.iter().map(|v| v.to_vec()).collect()).unwrap())
    }

    #[test]
    fn line_faces_project_to_endpoints() {
        let line = XiPower::new(1);
        let e = xi(&[&[3], &[4]]);
        assert_eq!(line.cell_face(&e, 1).unwrap().cell, xi(&[&[3]]));
        assert_eq!(line.cell_face(&e, 0).unwrap().cell, xi(&[&[4]]));
    }

    #[test]
    fn unit_square_cell_counts() {
        let sq = XiPower::new(2);
        let w = Window::cube(2, 0, 1);
        let counts: Vec<usize> = (0..=2).map(|d| sq.cells(d, Some(&w)).unwrap().len()).collect();
        assert_eq!(counts, vec![4, 5, 2]);
    }

    #[test]
    fn enumeration_needs_window() {
        assert_eq!(XiPower::new(1).cells(0, None), Err(Error::WindowRequired));
    }

    #[test]
    fn factors_of_a_triangle() {
        let c = XiCell::new(vec![vec![0, 0], vec![1, 0], vec![1, 1]]).unwrap();
        let f = c.factors();
        assert_eq!(f[0].to_string(), "x(0)(1)@1");
        assert_eq!(f[1].to_string(), "x(0)(1)@0");
    }

    #[test]
    fn locate_and_realize_agree() {
        let sq = XiPower::new(2);
        let p = vec![q(7, 3), q(-1, 4)];
        let (x, t) = sq.locate(&p).unwrap();
        assert_eq!(sq.realize(&x, &t).unwrap(), p);
    }
}
