use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::simplicial::{CellId, Simplex, XiCell};

/// An element `(σ, v)` of `ℤⁿ⋊Σₙ` acting on `ℝⁿ` by `x ↦ σ·x + v`, where
/// `σ` moves coordinate `j` to position `perm[j]`.
///
/// Composition follows the action: `(σ, v)∘(τ, w) = (στ, v + σ·w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Vec<usize>,
    trans: Vec<i64>,
}

impl GroupElement {
    /// `perm` is 0-based one-line notation: `perm[j]` is the image of `j`.
    pub fn new(perm: Vec<usize>, trans: Vec<i64>) -> Result<Self> {
        let n = perm.len();
        if trans.len() != n {
            return Err(Error::dims("translation length", n, trans.len()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidElement(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(GroupElement { perm, trans })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            perm: (0..n).collect(),
            trans: vec![0; n],
        }
    }

    pub fn translation(v: Vec<i64>) -> Self {
        GroupElement {
            perm: (0..v.len()).collect(),
            trans: v,
        }
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        GroupElement::new(perm, vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn trans(&self) -> &[i64] {
        &self.trans
    }

    pub fn is_identity(&self) -> bool {
        self.is_translation() && self.trans.iter().all(|&t| t == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    fn permute<T: Clone>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for (j, &p) in self.perm.iter().enumerate() {
            out[p] = x[j].clone();
        }
        out
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.dim() != other.dim() {
            return Err(Error::dims("group element dimension", self.dim(), other.dim()));
        }
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let sw = self.permute(&other.trans);
        let trans = self.trans.iter().zip(sw).map(|(a, b)| a + b).collect();
        Ok(GroupElement { perm, trans })
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.dim();
        let mut perm = vec![0; n];
        for (j, &p) in self.perm.iter().enumerate() {
            perm[p] = j;
        }
        let inv = GroupElement {
            perm,
            trans: vec![0; n],
        };
        let neg: Vec<i64> = self.trans.iter().map(|t| -t).collect();
        let trans = inv.permute(&neg);
        GroupElement {
            perm: inv.perm,
            trans,
        }
    }

    /// `g^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> GroupElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupElement::identity(self.dim());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same dimension");
        }
        acc
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        self.permute(x)
            .into_iter()
            .zip(&self.trans)
            .map(|(a, b)| a + b)
            .collect()
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        self.permute(x)
            .into_iter()
            .zip(&self.trans)
            .map(|(a, &b)| a + Q::from_integer(b.into()))
            .collect()
    }

    /// Action on `Ξⁿ`: permutes factors and shifts vertices.
    pub fn act(&self, x: &XiCell) -> Result<XiCell> {
        if x.arity() != self.dim() {
            return Err(Error::dims("cell arity", self.dim(), x.arity()));
        }
        Ok(x.map_vertices(|v| self.apply_int(v)))
    }

    /// Action on simplices of `Ξⁿ`; degeneracy words are preserved.
    pub fn act_simplex(&self, x: &Simplex) -> Result<Simplex> {
        match &x.cell {
            CellId::Xi(c) => Ok(x.with_cell(CellId::Xi(self.act(c)?))),
            other => Err(Error::UnknownCell(other.to_string())),
        }
    }

    /// Parses `perm p1 … pn trans t1 … tn` with a 1-based permutation.
    pub fn parse_fields(n: usize, toks: &[&str]) -> std::result::Result<Self, String> {
        if toks.len() != 2 * n + 2 || toks[0] != "perm" || toks[n + 1] != "trans" {
            return Err(format!("expected `perm <{n} entries> trans <{n} entries>`"));
        }
        let perm: Vec<usize> = toks[1..=n]
            .iter()
            .map(|t| t.parse::<usize>().ok().and_then(|p| p.checked_sub(1)))
            .collect::<Option<_>>()
            .ok_or("permutation entries must be 1-based integers")?;
        let trans: Vec<i64> = toks[n + 2..]
            .iter()
            .map(|t| t.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| "translation entries must be integers".to_string())?;
        GroupElement::new(perm, trans).map_err(|e| e.to_string())
    }
}

impl fmt::Display for GroupElement {
    /// `perm 2 1 trans 1 0` (1-based permutation).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.perm.iter().map(|x| (x + 1).to_string()).collect();
        let t: Vec<String> = self.trans.iter().map(|x| x.to_string()).collect();
        write!(f, "perm {} trans {}", p.join(" "), t.join(" "))
    }
}
