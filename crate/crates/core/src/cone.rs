//! Finitely generated rational cones, conal isometries and the
//! triangulability verdict for flat compact conal manifolds.
//!
//! Cone files:
//!
//! ```text
//! dim 2
//! ray 1 0
//! ray 0 1
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{quotient, GroupElement, GroupPresentation, Quotient};
use crate::linalg;
use crate::rational::{fmt_q, parse_q, primitive_integer, q, Q};

/// The cone of nonnegative combinations of finitely many rays.
///
/// Rays are stored as primitive integer vectors (denominators cleared,
/// content divided out, direction kept), deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    n: usize,
    rays: Vec<Vec<BigInt>>,
}

/// Summary of a cone's predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub n: usize,
    pub generating: bool,
    pub free: bool,
    pub extremal_rays: Vec<Vec<BigInt>>,
    pub span_rank: usize,
}

fn to_q(v: &[BigInt]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

impl RationalCone {
    pub fn new(n: usize, rays: &[Vec<Q>]) -> Result<Self> {
        let mut out = Vec::with_capacity(rays.len());
        for r in rays {
            if r.len() != n {
                return Err(Error::dims("ray length", n, r.len()));
            }
            if r.iter().all(Zero::is_zero) {
                return Err(Error::InvalidRay("zero vector".into()));
            }
            out.push(primitive_integer(r));
        }
        out.sort();
        out.dedup();
        Ok(RationalCone { n, rays: out })
    }

    pub fn from_integers(n: usize, rays: &[&[i64]]) -> Result<Self> {
        let qs: Vec<Vec<Q>> = rays
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        RationalCone::new(n, &qs)
    }

    /// `(ℝⁿ)⁺`, generated by the standard basis.
    pub fn positive_orthant(n: usize) -> Self {
        let rays: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| Q::from_integer(i64::from(i == j).into())).collect())
            .collect();
        RationalCone::new(n, &rays).expect("valid rays")
    }

    /// A polyhedral stand-in for the light cone of 3-dimensional Minkowski
    /// space: eight rays `(c, s, 1)` over rational points `(c, s)` of the
    /// unit circle, one near each multiple of 45°.
    pub fn light_cone_octagon() -> Self {
        let circle = [
            (q(1, 1), q(0, 1)),
            (q(20, 29), q(21, 29)),
            (q(0, 1), q(1, 1)),
            (q(-21, 29), q(20, 29)),
            (q(-1, 1), q(0, 1)),
            (q(-20, 29), q(-21, 29)),
            (q(0, 1), q(-1, 1)),
            (q(21, 29), q(-20, 29)),
        ];
        let rays: Vec<Vec<Q>> = circle
            .into_iter()
            .map(|(c, s)| vec![c, s, Q::one()])
            .collect();
        RationalCone::new(3, &rays).expect("valid rays")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn span_rank(&self) -> usize {
        let rows: Vec<Vec<Q>> = self.rays.iter().map(|r| to_q(r)).collect();
        linalg::rank(&rows)
    }

    /// A minimal generating sublist: rays are visited in lexicographic
    /// order and dropped when they are a nonnegative combination of the
    /// rays still kept. For pointed cones this is exactly the set of
    /// extremal rays.
    pub fn extremal_rays(&self) -> Vec<Vec<BigInt>> {
        let mut keep: Vec<bool> = vec![true; self.rays.len()];
        for i in 0..self.rays.len() {
            let others: Vec<Vec<Q>> = self
                .rays
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && keep[j])
                .map(|(_, r)| to_q(r))
                .collect();
            if linalg::nonnegative_combination(&others, &to_q(&self.rays[i])).is_some() {
                keep[i] = false;
            }
        }
        self.rays
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Spans the ambient space.
    pub fn is_generating(&self) -> bool {
        self.span_rank() == self.n
    }

    /// Generated by a linearly independent set.
    pub fn is_free(&self) -> bool {
        let ext: Vec<Vec<Q>> = self.extremal_rays().iter().map(|r| to_q(r)).collect();
        linalg::rank(&ext) == ext.len()
    }

    pub fn report(&self) -> ConeReport {
        let extremal_rays = self.extremal_rays();
        let ext_q: Vec<Vec<Q>> = extremal_rays.iter().map(|r| to_q(r)).collect();
        let span_rank = self.span_rank();
        ConeReport {
            n: self.n,
            generating: span_rank == self.n,
            free: linalg::rank(&ext_q) == ext_q.len(),
            extremal_rays,
            span_rank,
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let gens: Vec<Vec<Q>> = self.rays.iter().map(|r| to_q(r)).collect();
        v.len() == self.n && linalg::nonnegative_combination(&gens, v).is_some()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut rays = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "dim" => {
                    if n.is_some() {
                        return Err(Error::parse(line_no, "duplicate `dim` line"));
                    }
                    n = Some(
                        toks.get(1)
                            .filter(|_| toks.len() == 2)
                            .and_then(|t| t.parse::<usize>().ok())
                            .ok_or_else(|| Error::parse(line_no, "expected `dim <n>`"))?,
                    );
                }
                "ray" => {
                    let d = n.ok_or_else(|| Error::parse(line_no, "`ray` before `dim`"))?;
                    if toks.len() != d + 1 {
                        return Err(Error::parse(
                            line_no,
                            format!("ray has {} entries, expected {d}", toks.len() - 1),
                        ));
                    }
                    let r: Vec<Q> = toks[1..]
                        .iter()
                        .map(|t| parse_q(t))
                        .collect::<Option<_>>()
                        .ok_or_else(|| Error::parse(line_no, "ray entries must be rationals"))?;
                    if r.iter().all(Zero::is_zero) {
                        return Err(Error::parse(line_no, "zero ray"));
                    }
                    rays.push(r);
                }
                other => return Err(Error::parse(line_no, format!("unknown record `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing `dim` line"))?;
        RationalCone::new(n, &rays)
    }

    pub fn export(&self) -> String {
        let mut s = format!("dim {}\n", self.n);
        for r in &self.rays {
            let e: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "ray {}", e.join(" "));
        }
        s
    }
}

/// A conal isometry `x ↦ σ·x + t` of `(ℝⁿ, (ℝⁿ)⁺)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConalIsometry {
    /// `perm[j]` is the row holding the 1 of column `j`.
    pub perm: Vec<usize>,
    pub trans: Vec<Q>,
}

impl ConalIsometry {
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let mut out = self.trans.clone();
        for (j, &p) in self.perm.iter().enumerate() {
            out[p] += &x[j];
        }
        out
    }

    pub fn matrix(&self) -> Vec<Vec<Q>> {
        let n = self.perm.len();
        let mut m = vec![vec![Q::zero(); n]; n];
        for (j, &p) in self.perm.iter().enumerate() {
            m[p][j] = Q::one();
        }
        m
    }

    /// The group element when the translation is integral.
    pub fn to_group_element(&self) -> Option<GroupElement> {
        let t: Option<Vec<i64>> = self
            .trans
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer().try_into().ok()).flatten())
            .collect();
        GroupElement::new(self.perm.clone(), t?).ok()
    }
}

/// Factors `x ↦ A·x + t` as a coordinate permutation followed by a
/// translation, or explains why the map is not a conal isometry.
///
/// Checks, in order: `A·Aᵀ = 1`; every column of `A` nonnegative; every
/// column a standard basis vector.
pub fn factor_conal_isometry(a: &[Vec<Q>], t: &[Q]) -> Result<ConalIsometry> {
    let n = t.len();
    if a.len() != n {
        return Err(Error::dims("matrix rows vs translation", n, a.len()));
    }
    if let Some(r) = a.iter().find(|r| r.len() != n) {
        return Err(Error::dims("matrix columns", n, r.len()));
    }
    for i in 0..n {
        for k in 0..n {
            let dot: Q = (0..n).map(|j| &a[i][j] * &a[k][j]).sum();
            if dot != Q::from_integer(BigInt::from(u8::from(i == k))) {
                return Err(Error::NotOrthogonal);
            }
        }
    }
    for j in 0..n {
        if (0..n).any(|i| a[i][j].is_negative()) {
            return Err(Error::NotConePreserving { column: j });
        }
    }
    let mut perm = Vec::with_capacity(n);
    for j in 0..n {
        let nonzero: Vec<usize> = (0..n).filter(|&i| !a[i][j].is_zero()).collect();
        match nonzero.as_slice() {
            [i] if a[*i][j].is_one() => perm.push(*i),
            _ => return Err(Error::NotPermutation { column: j }),
        }
    }
    Ok(ConalIsometry {
        perm,
        trans: t.to_vec(),
    })
}

/// Verdict for one connected component.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub report: ConeReport,
    pub triangulable: bool,
    /// `Ξⁿ/G` when the cone is free and generating and a group was given.
    pub witness: Option<Quotient>,
}

/// A compact flat conal manifold `ℝⁿ/G` with fibre cone `C` is
/// triangulable exactly when `C` is generating and free; in that case
/// `Ξⁿ/G` is the triangulating simplicial set.
pub fn triangulability(cone: &RationalCone, group: Option<&GroupPresentation>) -> Result<Verdict> {
    if let Some(g) = group {
        if g.n != cone.dim() {
            return Err(Error::dims("group dimension vs cone dimension", cone.dim(), g.n));
        }
    }
    let report = cone.report();
    let triangulable = report.generating && report.free;
    let witness = match group {
        Some(g) if triangulable => Some(quotient(g)?),
        _ => None,
    };
    Ok(Verdict {
        report,
        triangulable,
        witness,
    })
}

/// One verdict per component.
pub fn triangulability_decision(
    components: &[(RationalCone, Option<GroupPresentation>)],
) -> Result<Vec<Verdict>> {
    components
        .iter()
        .map(|(c, g)| triangulability(c, g.as_ref()))
        .collect()
}

pub fn format_ray(r: &[BigInt]) -> String {
    let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

pub fn format_qvec(v: &[Q]) -> String {
    let s: Vec<String> = v.iter().map(fmt_q).collect();
    format!("({})", s.join(","))
}
