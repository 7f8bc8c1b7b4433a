//! Causal preorders on stream realizations.
//!
//! A point of `|S|` is a simplex `x` with coordinates `t` in
//! `∇[m] = {1 ≥ t₁ ≥ … ≥ t_m ≥ 0}`, whose k-th vertex is `(1^k, 0^{m−k})`.
//! Points are glued along `(d_i x, t) ≡ (x, δ_i t)` and
//! `(s_i x, t) ≡ (x, σ_i t)` where `δ₀` prepends 1, `δ_m` appends 0, `δ_i`
//! repeats `t_i`, and `σ_i` deletes the coordinate `t_{i+1}`. Every point has
//! a unique canonical form: a nondegenerate cell and strictly interior
//! coordinates.

mod line;
mod oracle;
mod order;
mod product;

use std::fmt;

use num_traits::{One, Zero};

pub use line::{line_point, line_value};
pub use oracle::{quotient_order_oracle, OracleAnswer, OracleRegion};
pub use order::{region_order, RegionOrder, WitnessStep};
pub use product::{product_order_check, ProductCheck};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};
use crate::simplicial::{parse_cell, parse_simplex, CellId, SimplicialSet, Simplex};

/// A point of `∇[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplexPoint(pub Vec<Q>);

impl SimplexPoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_member(&self) -> bool {
        let one = Q::one();
        let zero = Q::zero();
        let mut prev = &one;
        for x in &self.0 {
            if x > prev {
                return false;
            }
            prev = x;
        }
        *prev >= zero
    }

    pub fn is_interior(&self) -> bool {
        let one = Q::one();
        let zero = Q::zero();
        let mut prev = &one;
        for x in &self.0 {
            if x >= prev {
                return false;
            }
            prev = x;
        }
        *prev > zero || self.0.is_empty()
    }

    pub fn barycentric(&self) -> Vec<Q> {
        barycentric(&self.0)
    }
}

/// `x ≤ y` in `∇[m]`: coordinatewise.
pub fn simplex_leq(x: &[Q], y: &[Q]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::dims("simplex point dimension", x.len(), y.len()));
    }
    Ok(x.iter().zip(y).all(|(a, b)| a <= b))
}

/// Barycentric weights `λ_k = t_k − t_{k+1}` with `t₀ = 1`, `t_{m+1} = 0`.
pub(crate) fn barycentric(t: &[Q]) -> Vec<Q> {
    let m = t.len();
    (0..=m)
        .map(|k| {
            let hi = if k == 0 { Q::one() } else { t[k - 1].clone() };
            let lo = if k == m { Q::zero() } else { t[k].clone() };
            hi - lo
        })
        .collect()
}

/// Inverse of [`barycentric`]: `t_k = Σ_{i ≥ k} λ_i`.
pub(crate) fn from_barycentric(lambda: &[Q]) -> Vec<Q> {
    let m = lambda.len() - 1;
    let mut t = vec![Q::zero(); m];
    let mut acc = Q::zero();
    for k in (1..=m).rev() {
        acc += &lambda[k];
        t[k - 1] = acc.clone();
    }
    t
}

/// A point of a realization in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StreamPoint {
    /// A nondegenerate simplex.
    pub cell: Simplex,
    /// Strictly interior coordinates, one per dimension of `cell`.
    pub coords: Vec<Q>,
}

impl StreamPoint {
    pub fn vertex(cell: CellId) -> Self {
        StreamPoint {
            cell: Simplex::nondegenerate(cell, 0),
            coords: Vec::new(),
        }
    }

    /// The barycenter of a nondegenerate cell of dimension `dim`.
    pub fn barycenter(cell: CellId, dim: usize) -> Self {
        let d = Q::from_integer((dim as i64 + 1).into());
        let coords = (1..=dim)
            .map(|k| Q::from_integer(((dim + 1 - k) as i64).into()) / &d)
            .collect();
        StreamPoint {
            cell: Simplex::nondegenerate(cell, dim),
            coords,
        }
    }
}

impl fmt::Display for StreamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cell)?;
        for x in &self.coords {
            write!(f, " {}", fmt_q(x))?;
        }
        Ok(())
    }
}

/// Reduces `(x, t)` to canonical form by collapsing degeneracies and
/// passing to the face spanned by the vertices of positive weight.
pub fn canonicalize_point<S: SimplicialSet + ?Sized>(
    s: &S,
    x: &Simplex,
    t: &[Q],
) -> Result<StreamPoint> {
    if t.len() != x.dim() {
        return Err(Error::dims(format!("coordinates of `{x}`"), x.dim(), t.len()));
    }
    if !SimplexPoint(t.to_vec()).is_member() {
        let ts: Vec<String> = t.iter().map(fmt_q).collect();
        return Err(Error::NotInSimplex(format!("({}) is not in ∇[{}]", ts.join(","), t.len())));
    }
    let mut x = x.clone();
    let mut t = t.to_vec();
    loop {
        if x.is_degenerate() {
            // collapse: t'_j = t_k for the least k over j
            let eta = x.surjection();
            let mut first = vec![usize::MAX; x.cell_dim + 1];
            for (k, &v) in eta.iter().enumerate() {
                if first[v] == usize::MAX {
                    first[v] = k;
                }
            }
            t = (1..=x.cell_dim).map(|j| t[first[j] - 1].clone()).collect();
            x = Simplex::nondegenerate(x.cell.clone(), x.cell_dim);
        }
        let lambda = barycentric(&t);
        let keep: Vec<usize> = (0..lambda.len()).filter(|&k| !lambda[k].is_zero()).collect();
        if keep.len() == lambda.len() {
            return Ok(StreamPoint { cell: x, coords: t });
        }
        let y = s.face_on(&x, &keep)?;
        t = keep[1..].iter().map(|&k| t[k - 1].clone()).collect();
        x = y;
    }
}

/// A region of a realization on which a preorder is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    /// The whole realization (finite presentations).
    Whole,
    /// Points whose realization coordinates lie in the open box
    /// `Π (lo_i, hi_i)`.
    Window { lo: Vec<Q>, hi: Vec<Q> },
    /// The open star of a cell: interiors of all simplices having it as a
    /// face.
    Star(CellId),
}

impl Region {
    /// `whole`, `window <lo1> <hi1> … <lon> <hin>` or `star <cell-id>`.
    pub fn parse(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks.first() {
            Some(&"whole") if toks.len() == 1 => Ok(Region::Whole),
            Some(&"star") if toks.len() == 2 => Ok(Region::Star(parse_cell(toks[1])?)),
            Some(&"window") if toks.len() % 2 == 1 && toks.len() > 1 => {
                let vals: Vec<Q> = toks[1..]
                    .iter()
                    .map(|t| parse_q(t))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::parse(0, format!("bad window bounds in `{s}`")))?;
                let lo: Vec<Q> = vals.iter().step_by(2).cloned().collect();
                let hi: Vec<Q> = vals.iter().skip(1).step_by(2).cloned().collect();
                if lo.iter().zip(&hi).any(|(l, h)| l >= h) {
                    return Err(Error::parse(0, format!("empty window `{s}`")));
                }
                Ok(Region::Window { lo, hi })
            }
            _ => Err(Error::parse(
                0,
                format!("bad region `{s}`: expected `whole`, `window …` or `star <cell>`"),
            )),
        }
    }

    pub fn window(lo: Vec<Q>, hi: Vec<Q>) -> Self {
        Region::Window { lo, hi }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Whole => write!(f, "whole"),
            Region::Star(c) => write!(f, "star {c}"),
            Region::Window { lo, hi } => {
                write!(f, "window")?;
                for (l, h) in lo.iter().zip(hi) {
                    write!(f, " {} {}", fmt_q(l), fmt_q(h))?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `point <cell-id> <t1> … <tk>` (the keyword is optional) and
/// canonicalizes the result.
pub fn parse_point<S: SimplicialSet + ?Sized>(s: &S, line: &str) -> Result<StreamPoint> {
    let mut toks: Vec<&str> = line.split_whitespace().collect();
    if toks.first() == Some(&"point") {
        toks.remove(0);
    }
    let Some((cell, coords)) = toks.split_first() else {
        return Err(Error::parse(0, "expected `point <cell-id> <t1> … <tk>`"));
    };
    let mut x = parse_simplex(cell)?;
    if let CellId::Named(_) = &x.cell {
        x = Simplex::new(x.cell.clone(), s.cell_dim(&x.cell)?, x.deg_word.clone())?;
    } else {
        s.cell_dim(&x.cell)?;
    }
    let t: Vec<Q> = coords
        .iter()
        .map(|c| parse_q(c))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::parse(0, format!("bad coordinates in `{line}`")))?;
    canonicalize_point(s, &x, &t)
}

/// Parses a sample file: one `point` record per line, `#` comments.
pub fn parse_samples<S: SimplicialSet + ?Sized>(s: &S, text: &str) -> Result<Vec<StreamPoint>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = parse_point(s, line).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(idx + 1, message),
            other => Error::parse(idx + 1, other.to_string()),
        })?;
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use crate::simplicial::{Presentation, XiCell};

    fn xi(vs: &[&[i64]]) -> CellId {
        CellId::Xi(XiCell::new(vs.iter().map(|v| v.to_vec()).collect()).unwrap())
    }

    #[test]
    fn membership_and_interior() {
        assert!(SimplexPoint(vec![q(1, 2), q(1, 4)]).is_interior());
        assert!(SimplexPoint(vec![qi(1), q(1, 4)]).is_member());
        assert!(!SimplexPoint(vec![qi(1), q(1, 4)]).is_interior());
        assert!(!SimplexPoint(vec![q(1, 4), q(1, 2)]).is_member());
        assert!(SimplexPoint(vec![]).is_interior());
    }

    #[test]
    fn barycentric_round_trip() {
        let t = vec![q(3, 4), q(1, 2), q(1, 8)];
        let l = barycentric(&t);
        assert_eq!(l.iter().cloned().sum::<Q>(), qi(1));
        assert_eq!(from_barycentric(&l), t);
    }

    #[test]
    fn canonical_forms_on_the_line() {
        let line = Presentation::xi(1);
        let e = Simplex::nondegenerate(xi(&[&[0], &[1]]), 1);
        let p = canonicalize_point(&line, &e, &[qi(0)]).unwrap();
        assert_eq!(p, StreamPoint::vertex(xi(&[&[0]])));
        let p = canonicalize_point(&line, &e, &[qi(1)]).unwrap();
        assert_eq!(p, StreamPoint::vertex(xi(&[&[1]])));
        let p = canonicalize_point(&line, &e, &[q(1, 2)]).unwrap();
        assert_eq!(p.cell, e);
        let d = Simplex::new(xi(&[&[3]]), 0, vec![0]).unwrap();
        let p = canonicalize_point(&line, &d, &[q(1, 3)]).unwrap();
        assert_eq!(p, StreamPoint::vertex(xi(&[&[3]])));
        assert!(canonicalize_point(&line, &e, &[qi(2)]).is_err());
    }

    #[test]
    fn collapse_keeps_the_right_coordinate() {
        // s_1 of the edge (0)(1): vertex sequence 0, 1, 1
        let line = Presentation::xi(1);
        let x = Simplex::new(xi(&[&[0], &[1]]), 1, vec![1]).unwrap();
        let p = canonicalize_point(&line, &x, &[q(2, 3), q(1, 3)]).unwrap();
        assert_eq!(p.coords, vec![q(2, 3)]);
        let y = Simplex::new(xi(&[&[0], &[1]]), 1, vec![0]).unwrap();
        let p = canonicalize_point(&line, &y, &[q(2, 3), q(1, 3)]).unwrap();
        assert_eq!(p.coords, vec![q(1, 3)]);
    }

    #[test]
    fn region_parsing() {
        assert_eq!(Region::parse("whole").unwrap(), Region::Whole);
        let w = Region::parse("window -2 2 0 1/2").unwrap();
        assert_eq!(w, Region::window(vec![qi(-2), qi(0)], vec![qi(2), q(1, 2)]));
        assert_eq!(w.to_string(), "window -2 2 0 1/2");
        assert_eq!(Region::parse("star x(0,0)").unwrap(), Region::Star(xi(&[&[0, 0]])));
        assert!(Region::parse("window 1 0").is_err());
        assert!(Region::parse("box 0 1").is_err());
    }

    #[test]
    fn barycenters_are_interior() {
        let b = StreamPoint::barycenter(xi(&[&[0, 0], &[1, 0], &[1, 1]]), 2);
        assert_eq!(b.coords, vec![q(2, 3), q(1, 3)]);
        let line = Presentation::xi(2);
        let p = Presentation::xi(2).realize(&b.cell, &b.coords).unwrap();
        assert_eq!(p, vec![q(2, 3), q(1, 3)]);
        assert_eq!(canonicalize_point(&line, &b.cell, &b.coords).unwrap(), b);
    }

    #[test]
    fn sample_parsing() {
        let line = Presentation::xi(1);
        let ps = parse_samples(&line, "# samples\npoint x(0)(1) 1/2\npoint x(0)(1) 1\n").unwrap();
        assert_eq!(ps[1], StreamPoint::vertex(xi(&[&[1]])));
        let e = parse_samples(&line, "point x(0)(1) 1/2\npoint x(0)(1) 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }
}
