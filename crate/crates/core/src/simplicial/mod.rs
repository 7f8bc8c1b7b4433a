//! Simplicial sets in Eilenberg–Zilber normal form.
//!
//! Every simplex is stored as a nondegenerate cell together with a strictly
//! decreasing degeneracy word `s_{j1} s_{j2} … s_{jk}` (outermost first).
//! Face and degeneracy operators are evaluated on the corresponding
//! monotone surjection `[m] → [d]`: the word is exactly the set of indices
//! `j` where the surjection identifies `j` and `j + 1`, so composing with a
//! coface or codegeneracy and re-reading the collapse set gives the unique
//! normal form directly. Faces of the underlying cell are delegated to the
//! presentation.

mod cell;
mod finite;
mod identities;
mod presentation;
mod xi;

use std::fmt;

pub use cell::{parse_cell, parse_simplex, CellId};
pub use finite::FiniteSet;
pub use identities::{verify_identities, IdentityFamily, Violation};
pub use presentation::{euler_characteristic, f_vector, Presentation};
pub use xi::{XiCell, XiPower};

use crate::error::{Error, Result};
use crate::rational::Q;

/// A simplex `s_{deg_word} cell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub cell: CellId,
    pub cell_dim: usize,
    /// Degeneracy indices, outermost first, strictly decreasing.
    pub deg_word: Vec<usize>,
}

impl Simplex {
    pub fn nondegenerate(cell: CellId, cell_dim: usize) -> Self {
        Simplex {
            cell,
            cell_dim,
            deg_word: Vec::new(),
        }
    }

    /// Checks the word against the normal-form invariants.
    pub fn new(cell: CellId, cell_dim: usize, deg_word: Vec<usize>) -> Result<Self> {
        validate_deg_word(&deg_word, cell_dim)?;
        Ok(Simplex {
            cell,
            cell_dim,
            deg_word,
        })
    }

    pub fn dim(&self) -> usize {
        self.cell_dim + self.deg_word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.deg_word.is_empty()
    }

    /// The surjection `[dim] → [cell_dim]` encoded by the degeneracy word.
    pub fn surjection(&self) -> Vec<usize> {
        surjection(&self.deg_word, self.dim())
    }

    /// Replaces the cell, keeping the degeneracy word.
    pub fn with_cell(&self, cell: CellId) -> Self {
        Simplex {
            cell,
            cell_dim: self.cell_dim,
            deg_word: self.deg_word.clone(),
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cell)?;
        if !self.deg_word.is_empty() {
            let w: Vec<String> = self.deg_word.iter().map(|j| j.to_string()).collect();
            write!(f, "@{}", w.join(","))?;
        }
        Ok(())
    }
}

pub(crate) fn validate_deg_word(word: &[usize], cell_dim: usize) -> Result<()> {
    let k = word.len();
    for (p, &j) in word.iter().enumerate() {
        if p + 1 < k && word[p + 1] >= j {
            return Err(Error::InvalidCell(format!(
                "degeneracy word {word:?} is not strictly decreasing"
            )));
        }
        let stage_dim = cell_dim + (k - 1 - p);
        if j > stage_dim {
            return Err(Error::IndexOutOfRange {
                op: "degeneracy",
                index: j,
                dim: stage_dim,
            });
        }
    }
    Ok(())
}

/// Surjection `[total_dim] → [total_dim - |word|]` collapsing `j, j+1` for
/// every `j` in the word.
pub(crate) fn surjection(word: &[usize], total_dim: usize) -> Vec<usize> {
    let mut eta = Vec::with_capacity(total_dim + 1);
    let mut v = 0;
    eta.push(0);
    for k in 0..total_dim {
        if !word.contains(&k) {
            v += 1;
        }
        eta.push(v);
    }
    eta
}

/// Collapse set of a monotone surjection, as a decreasing degeneracy word.
pub(crate) fn collapse_word(eta: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = (0..eta.len().saturating_sub(1))
        .filter(|&k| eta[k] == eta[k + 1])
        .collect();
    w.reverse();
    w
}

/// A face or degeneracy symbol in an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Face(usize),
    Degeneracy(usize),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Face(i) => write!(f, "d{i}"),
            Op::Degeneracy(i) => write!(f, "s{i}"),
        }
    }
}

impl std::str::FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("bad operator `{s}`"));
        let (kind, idx) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let i: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "d" => Ok(Op::Face(i)),
            "s" => Ok(Op::Degeneracy(i)),
            _ => Err(bad()),
        }
    }
}

/// Integer box of vertex coordinates used to enumerate rule-based
/// presentations. Bounds are inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        Window { lo, hi }
    }

    /// `[lo, hi]ⁿ`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Self {
        Window {
            lo: vec![lo; n],
            hi: vec![hi; n],
        }
    }

    pub fn arity(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.lo.len()
            && v.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (l, h))| l <= x && x <= h)
    }

    pub(crate) fn slice(&self, from: usize, len: usize) -> Window {
        Window {
            lo: self.lo[from..from + len].to_vec(),
            hi: self.hi[from..from + len].to_vec(),
        }
    }
}

/// A simplicial set given by its nondegenerate cells and their faces.
///
/// Implementors supply the cell-level data; the provided methods evaluate
/// arbitrary operators on normal-form simplices.
pub trait SimplicialSet {
    fn cell_dim(&self, cell: &CellId) -> Result<usize>;

    /// `d_i` of the nondegenerate cell, in normal form.
    fn cell_face(&self, cell: &CellId, i: usize) -> Result<Simplex>;

    /// Nondegenerate cells of dimension `dim`, sorted. Infinite
    /// presentations need a window.
    fn cells(&self, dim: usize, window: Option<&Window>) -> Result<Vec<CellId>>;

    fn is_finite(&self) -> bool;

    /// Upper bound on the dimension of nondegenerate cells.
    fn max_cell_dim(&self) -> usize;

    /// Number of integer coordinates a window for this presentation has.
    fn coord_arity(&self) -> usize;

    /// Coordinates in `ℝⁿ` of the point `(x, t)` when the presentation
    /// carries a geometric model.
    fn realize(&self, x: &Simplex, t: &[Q]) -> Option<Vec<Q>>;

    /// Checks that the set is locally finite on the given window: every
    /// vertex lies in finitely many nondegenerate simplices. Presentations
    /// implemented here are locally finite by construction.
    fn is_locally_finite(&self) -> bool {
        true
    }

    fn simplex(&self, cell: &CellId) -> Result<Simplex> {
        Ok(Simplex::nondegenerate(cell.clone(), self.cell_dim(cell)?))
    }

    /// `d_i x`.
    fn face(&self, x: &Simplex, i: usize) -> Result<Simplex> {
        let m = x.dim();
        if m == 0 || i > m {
            return Err(Error::IndexOutOfRange {
                op: "face",
                index: i,
                dim: m,
            });
        }
        let eta = x.surjection();
        let composite: Vec<usize> = (0..m).map(|k| eta[if k < i { k } else { k + 1 }]).collect();
        let d = x.cell_dim;
        let missing = (0..=d).find(|v| !composite.contains(v));
        match missing {
            None => Ok(Simplex {
                cell: x.cell.clone(),
                cell_dim: d,
                deg_word: collapse_word(&composite),
            }),
            Some(v) => {
                let f = self.cell_face(&x.cell, v)?;
                let renumbered: Vec<usize> = composite
                    .iter()
                    .map(|&c| if c > v { c - 1 } else { c })
                    .collect();
                let inner = f.surjection();
                let total: Vec<usize> = renumbered.iter().map(|&c| inner[c]).collect();
                Ok(Simplex {
                    cell: f.cell,
                    cell_dim: f.cell_dim,
                    deg_word: collapse_word(&total),
                })
            }
        }
    }

    /// `s_i x`.
    fn degeneracy(&self, x: &Simplex, i: usize) -> Result<Simplex> {
        let m = x.dim();
        if i > m {
            return Err(Error::IndexOutOfRange {
                op: "degeneracy",
                index: i,
                dim: m,
            });
        }
        let eta = x.surjection();
        let composite: Vec<usize> = (0..=m + 1)
            .map(|k| eta[if k <= i { k } else { k - 1 }])
            .collect();
        Ok(Simplex {
            cell: x.cell.clone(),
            cell_dim: x.cell_dim,
            deg_word: collapse_word(&composite),
        })
    }

    fn apply(&self, x: &Simplex, op: Op) -> Result<Simplex> {
        match op {
            Op::Face(i) => self.face(x, i),
            Op::Degeneracy(i) => self.degeneracy(x, i),
        }
    }

    /// Applies `ops` in order (first symbol first) to the nondegenerate
    /// cell and returns the Eilenberg–Zilber form.
    fn normal_form(&self, cell: &CellId, ops: &[Op]) -> Result<Simplex> {
        let mut x = self.simplex(cell)?;
        for &op in ops {
            x = self.apply(&x, op)?;
        }
        Ok(x)
    }

    /// The face of `x` spanned by the vertices in `keep` (sorted, nonempty).
    fn face_on(&self, x: &Simplex, keep: &[usize]) -> Result<Simplex> {
        let mut y = x.clone();
        for v in (0..=x.dim()).rev() {
            if !keep.contains(&v) {
                y = self.face(&y, v)?;
            }
        }
        Ok(y)
    }

    /// All simplices of dimension `dim`, degenerate ones included.
    fn all_simplices(&self, dim: usize, window: Option<&Window>) -> Result<Vec<Simplex>> {
        let mut out = Vec::new();
        for d in 0..=dim.min(self.max_cell_dim()) {
            let cells = self.cells(d, window)?;
            if cells.is_empty() {
                continue;
            }
            let words = degeneracy_words(dim, dim - d);
            for c in &cells {
                for w in &words {
                    out.push(Simplex {
                        cell: c.clone(),
                        cell_dim: d,
                        deg_word: w.clone(),
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Every normal-form degeneracy word producing a `dim`-simplex from a cell
/// of dimension `dim - count`: the decreasing `count`-subsets of `0..dim`.
pub(crate) fn degeneracy_words(dim: usize, count: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, end: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut w = cur.clone();
            w.reverse();
            out.push(w);
            return;
        }
        for j in start..end {
            if end - j < left {
                break;
            }
            cur.push(j);
            rec(j + 1, end, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, dim, count, &mut Vec::new(), &mut out);
    out
}
