use super::xi::{sequence_of, simplex_from_sequence};
use super::{
    collapse_word, surjection, CellId, FiniteSet, SimplicialSet, Simplex, Window, XiPower,
};
use crate::error::{Error, Result};
use crate::rational::Q;

/// A simplicial set in one of the supported forms.
///
/// Quotients `Ξⁿ/G` are computed eagerly (see [`crate::group::quotient`])
/// and appear here as finite tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Finite(FiniteSet),
    Xi(XiPower),
    Product(Box<Presentation>, Box<Presentation>),
    DisjointUnion(Vec<Presentation>),
}

impl Presentation {
    pub fn xi(n: usize) -> Self {
        Presentation::Xi(XiPower::new(n))
    }

    pub fn product(a: Presentation, b: Presentation) -> Self {
        Presentation::Product(Box::new(a), Box::new(b))
    }

    pub fn single_vertex() -> Self {
        Presentation::Finite(
            FiniteSet::new(vec![("pt".to_string(), 0, Vec::new())]).expect("valid table"),
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Presentation::Finite(_) => "finite-table",
            Presentation::Xi(_) => "xi-power",
            Presentation::Product(..) => "product",
            Presentation::DisjointUnion(_) => "disjoint-union",
        }
    }

    /// Parses the inline name `xi^<n>`.
    pub fn parse_inline(s: &str) -> Option<Self> {
        let n = s.strip_prefix("xi^")?.parse().ok()?;
        Some(Presentation::xi(n))
    }

    /// Normal form of the product simplex `(a, b)`: common degeneracies are
    /// pulled out so the remaining pair is nondegenerate.
    pub fn product_simplex(a: &Simplex, b: &Simplex) -> Result<Simplex> {
        if a.dim() != b.dim() {
            return Err(Error::dims("product components", a.dim(), b.dim()));
        }
        let common: Vec<usize> = a
            .deg_word
            .iter()
            .copied()
            .filter(|j| b.deg_word.contains(j))
            .collect();
        let strip = |x: &Simplex| Simplex {
            cell: x.cell.clone(),
            cell_dim: x.cell_dim,
            deg_word: x
                .deg_word
                .iter()
                .filter(|j| !common.contains(j))
                .map(|&j| j - common.iter().filter(|&&k| k < j).count())
                .collect(),
        };
        let a0 = strip(a);
        let b0 = strip(b);
        Ok(Simplex {
            cell_dim: a0.dim(),
            cell: CellId::pair(a0, b0),
            deg_word: common,
        })
    }

    /// The two components of a product simplex, each of the simplex's full
    /// dimension.
    pub fn product_components(x: &Simplex) -> Option<(Simplex, Simplex)> {
        let CellId::Pair(a, b) = &x.cell else {
            return None;
        };
        let lift = |c: &Simplex| {
            let eta = surjection(&x.deg_word, x.dim());
            let inner = c.surjection();
            let total: Vec<usize> = eta.iter().map(|&k| inner[k]).collect();
            Simplex {
                cell: c.cell.clone(),
                cell_dim: c.cell_dim,
                deg_word: collapse_word(&total),
            }
        };
        Some((lift(a), lift(b)))
    }

    /// Raw location of a point of `ℝᵏ` in a presentation built from powers
    /// of `Ξ` by products. The returned point is generally not canonical.
    pub fn locate(&self, p: &[Q]) -> Result<(Simplex, Vec<Q>)> {
        match self {
            Presentation::Xi(x) => x.locate(p),
            Presentation::Product(a, b) => {
                let na = a.coord_arity();
                if p.len() != na + b.coord_arity() {
                    return Err(Error::dims("point arity", na + b.coord_arity(), p.len()));
                }
                let (sa, ta) = a.locate(&p[..na])?;
                let (sb, tb) = b.locate(&p[na..])?;
                // merge the two decreasing coordinate lists; ties take A first
                let (mut i, mut j) = (0, 0);
                let mut t = Vec::with_capacity(ta.len() + tb.len());
                let mut from_b = Vec::new();
                while i < ta.len() || j < tb.len() {
                    let take_a = j == tb.len() || (i < ta.len() && ta[i] >= tb[j]);
                    if take_a {
                        t.push(ta[i].clone());
                        from_b.push(false);
                        i += 1;
                    } else {
                        t.push(tb[j].clone());
                        from_b.push(true);
                        j += 1;
                    }
                }
                let expand = |x: &Simplex, skip_when: bool| {
                    let mut eta = vec![0usize];
                    for &fb in &from_b {
                        let last = *eta.last().unwrap();
                        eta.push(if fb == skip_when { last } else { last + 1 });
                    }
                    let inner = x.surjection();
                    let total: Vec<usize> = eta.iter().map(|&k| inner[k]).collect();
                    Simplex {
                        cell: x.cell.clone(),
                        cell_dim: x.cell_dim,
                        deg_word: collapse_word(&total),
                    }
                };
                let full_a = expand(&sa, true);
                let full_b = expand(&sb, false);
                Ok((Presentation::product_simplex(&full_a, &full_b)?, t))
            }
            _ => Err(Error::UnsupportedRegion(format!(
                "{} presentations have no coordinate model",
                self.kind()
            ))),
        }
    }

    /// Simplex of `Ξⁿ` or a product of such with the given vertex sequence.
    pub fn simplex_from_sequence(&self, seq: &[Vec<i64>]) -> Result<Simplex> {
        match self {
            Presentation::Xi(_) => simplex_from_sequence(seq),
            Presentation::Product(a, b) => {
                let na = a.coord_arity();
                let sa: Vec<Vec<i64>> = seq.iter().map(|v| v[..na].to_vec()).collect();
                let sb: Vec<Vec<i64>> = seq.iter().map(|v| v[na..].to_vec()).collect();
                Presentation::product_simplex(
                    &a.simplex_from_sequence(&sa)?,
                    &b.simplex_from_sequence(&sb)?,
                )
            }
            _ => Err(Error::UnsupportedRegion("no vertex-sequence model".into())),
        }
    }

    /// Vertex sequence of a simplex of `Ξⁿ` or of a product of such.
    pub fn sequence_of(&self, x: &Simplex) -> Option<Vec<Vec<i64>>> {
        match self {
            Presentation::Xi(_) => sequence_of(x),
            Presentation::Product(a, b) => {
                let (sa, sb) = Presentation::product_components(x)?;
                let qa = a.sequence_of(&sa)?;
                let qb = b.sequence_of(&sb)?;
                Some(
                    qa.into_iter()
                        .zip(qb)
                        .map(|(mut u, v)| {
                            u.extend(v);
                            u
                        })
                        .collect(),
                )
            }
            _ => None,
        }
    }

    fn window_part(&self, w: Option<&Window>, from: usize, len: usize) -> Option<Window> {
        let w = w?;
        (len > 0 && w.arity() >= from + len).then(|| w.slice(from, len))
    }

    fn check_window(&self, w: Option<&Window>) -> Result<()> {
        match w {
            Some(w) if w.arity() != self.coord_arity() => {
                Err(Error::dims("window arity", self.coord_arity(), w.arity()))
            }
            _ => Ok(()),
        }
    }
}

impl SimplicialSet for Presentation {
    fn cell_dim(&self, cell: &CellId) -> Result<usize> {
        match (self, cell) {
            (Presentation::Finite(s), _) => s.cell_dim(cell),
            (Presentation::Xi(s), _) => s.cell_dim(cell),
            (Presentation::Product(a, b), CellId::Pair(x, y)) => {
                if x.dim() != y.dim() || x.deg_word.iter().any(|j| y.deg_word.contains(j)) {
                    return Err(Error::InvalidCell(format!("`{cell}` is not a nondegenerate pair")));
                }
                a.cell_dim(&x.cell)?;
                b.cell_dim(&y.cell)?;
                Ok(x.dim())
            }
            (Presentation::DisjointUnion(parts), CellId::Tagged(k, inner)) => parts
                .get(*k)
                .ok_or_else(|| Error::UnknownCell(cell.to_string()))?
                .cell_dim(inner),
            _ => Err(Error::UnknownCell(cell.to_string())),
        }
    }

    fn cell_face(&self, cell: &CellId, i: usize) -> Result<Simplex> {
        match (self, cell) {
            (Presentation::Finite(s), _) => s.cell_face(cell, i),
            (Presentation::Xi(s), _) => s.cell_face(cell, i),
            (Presentation::Product(a, b), CellId::Pair(x, y)) => {
                let fx = a.face(x, i)?;
                let fy = b.face(y, i)?;
                Presentation::product_simplex(&fx, &fy)
            }
            (Presentation::DisjointUnion(parts), CellId::Tagged(k, inner)) => {
                let part = parts
                    .get(*k)
                    .ok_or_else(|| Error::UnknownCell(cell.to_string()))?;
                let f = part.cell_face(inner, i)?;
                Ok(f.with_cell(CellId::Tagged(*k, Box::new(f.cell.clone()))))
            }
            _ => Err(Error::UnknownCell(cell.to_string())),
        }
    }

    fn cells(&self, dim: usize, window: Option<&Window>) -> Result<Vec<CellId>> {
        self.check_window(window)?;
        match self {
            Presentation::Finite(s) => s.cells(dim, None),
            Presentation::Xi(s) => s.cells(dim, window),
            Presentation::Product(a, b) => {
                let na = a.coord_arity();
                let wa = a.window_part(window, 0, na);
                let wb = b.window_part(window, na, b.coord_arity());
                let xs = a.all_simplices(dim, wa.as_ref())?;
                let ys = b.all_simplices(dim, wb.as_ref())?;
                let mut out = Vec::new();
                for x in &xs {
                    for y in &ys {
                        if x.deg_word.iter().all(|j| !y.deg_word.contains(j)) {
                            out.push(CellId::pair(x.clone(), y.clone()));
                        }
                    }
                }
                out.sort();
                Ok(out)
            }
            Presentation::DisjointUnion(parts) => {
                let mut out = Vec::new();
                for (k, p) in parts.iter().enumerate() {
                    let w = p.window_part(window, 0, p.coord_arity());
                    for c in p.cells(dim, w.as_ref())? {
                        out.push(CellId::Tagged(k, Box::new(c)));
                    }
                }
                Ok(out)
            }
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            Presentation::Finite(_) => true,
            Presentation::Xi(s) => s.is_finite(),
            Presentation::Product(a, b) => a.is_finite() && b.is_finite(),
            Presentation::DisjointUnion(parts) => parts.iter().all(|p| p.is_finite()),
        }
    }

    fn max_cell_dim(&self) -> usize {
        match self {
            Presentation::Finite(s) => s.max_cell_dim(),
            Presentation::Xi(s) => s.max_cell_dim(),
            Presentation::Product(a, b) => a.max_cell_dim() + b.max_cell_dim(),
            Presentation::DisjointUnion(parts) => {
                parts.iter().map(|p| p.max_cell_dim()).max().unwrap_or(0)
            }
        }
    }

    fn coord_arity(&self) -> usize {
        match self {
            Presentation::Finite(_) => 0,
            Presentation::Xi(s) => s.n,
            Presentation::Product(a, b) => a.coord_arity() + b.coord_arity(),
            Presentation::DisjointUnion(parts) => {
                parts.iter().map(|p| p.coord_arity()).max().unwrap_or(0)
            }
        }
    }

    fn realize(&self, x: &Simplex, t: &[Q]) -> Option<Vec<Q>> {
        match self {
            Presentation::Finite(_) => None,
            Presentation::Xi(s) => s.realize(x, t),
            Presentation::Product(a, b) => {
                let (xa, xb) = Presentation::product_components(x)?;
                let mut p = a.realize(&xa, t)?;
                p.extend(b.realize(&xb, t)?);
                Some(p)
            }
            Presentation::DisjointUnion(parts) => {
                let CellId::Tagged(k, inner) = &x.cell else {
                    return None;
                };
                parts.get(*k)?.realize(&x.with_cell((**inner).clone()), t)
            }
        }
    }
}

/// Number of nondegenerate simplices in each dimension, up to the
/// dimension of the set. The empty set has an empty f-vector.
pub fn f_vector<S: SimplicialSet + ?Sized>(s: &S) -> Result<Vec<usize>> {
    if !s.is_finite() {
        return Err(Error::NotFinite);
    }
    let mut f: Vec<usize> = (0..=s.max_cell_dim())
        .map(|d| s.cells(d, None).map(|c| c.len()))
        .collect::<Result<_>>()?;
    while f.last() == Some(&0) {
        f.pop();
    }
    Ok(f)
}

pub fn euler_characteristic<S: SimplicialSet + ?Sized>(s: &S) -> Result<i64> {
    Ok(f_vector(s)?
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::XiCell;

    const INTERVAL: &str = "\
cell a dim 0
cell b dim 0
cell e dim 1
face 0 b deg
face 1 a deg
";

    fn interval() -> Presentation {
        Presentation::Finite(FiniteSet::parse(INTERVAL).unwrap())
    }

    #[test]
    fn square_of_an_interval() {
        let sq = Presentation::product(interval(), interval());
        assert_eq!(f_vector(&sq).unwrap(), vec![4, 5, 2]);
        assert_eq!(euler_characteristic(&sq).unwrap(), 1);
    }

    #[test]
    fn unit_law_for_products() {
        let p = Presentation::product(interval(), Presentation::single_vertex());
        assert_eq!(f_vector(&p).unwrap(), f_vector(&interval()).unwrap());
        let q = Presentation::product(Presentation::single_vertex(), interval());
        assert_eq!(f_vector(&q).unwrap(), vec![2, 1]);
    }

    #[test]
    fn disjoint_union_adds_f_vectors() {
        let u = Presentation::DisjointUnion(vec![
            interval(),
            Presentation::product(interval(), interval()),
            Presentation::single_vertex(),
        ]);
        assert_eq!(f_vector(&u).unwrap(), vec![2 + 4 + 1, 1 + 5, 2]);
        let e = Presentation::DisjointUnion(vec![]);
        assert_eq!(f_vector(&e).unwrap(), Vec::<usize>::new());
        assert_eq!(euler_characteristic(&e).unwrap(), 0);
    }

    #[test]
    fn infinite_sets_have_no_f_vector() {
        assert_eq!(f_vector(&Presentation::xi(2)), Err(Error::NotFinite));
    }

    #[test]
    fn shuffles_over_one_square() {
        let line = Presentation::xi(1);
        let p = Presentation::product(line.clone(), line);
        let w = Window::cube(2, 0, 1);
        let tri = p.cells(2, Some(&w)).unwrap();
        assert_eq!(tri.len(), 2);
        let names: Vec<String> = tri.iter().map(|c| c.to_string()).collect();
        assert!(names.contains(&"p{x(0)(1)@0;x(0)(1)@1}".to_string()));
        assert!(names.contains(&"p{x(0)(1)@1;x(0)(1)@0}".to_string()));
    }

    #[test]
    fn product_of_lines_matches_square_lattice() {
        let line = Presentation::xi(1);
        let p = Presentation::product(line.clone(), line);
        let sq = Presentation::xi(2);
        let w = Window::cube(2, -1, 2);
        for d in 0..=2 {
            assert_eq!(
                p.cells(d, Some(&w)).unwrap().len(),
                sq.cells(d, Some(&w)).unwrap().len()
            );
        }
    }

    #[test]
    fn faces_commute_with_projections() {
        let line = Presentation::xi(1);
        let p = Presentation::product(line.clone(), line.clone());
        let w = Window::cube(2, 0, 2);
        for m in 0..=3 {
            for x in p.all_simplices(m, Some(&w)).unwrap() {
                for i in 0..=m {
                    if m == 0 {
                        continue;
                    }
                    let f = p.face(&x, i).unwrap();
                    let (fa, fb) = Presentation::product_components(&f).unwrap();
                    let (xa, xb) = Presentation::product_components(&x).unwrap();
                    assert_eq!(fa, line.face(&xa, i).unwrap());
                    assert_eq!(fb, line.face(&xb, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn sequence_model_round_trip() {
        let sq = Presentation::xi(2);
        let seq = vec![vec![0, 0], vec![1, 0], vec![1, 0], vec![1, 1]];
        let x = sq.simplex_from_sequence(&seq).unwrap();
        assert_eq!(x.deg_word, vec![1]);
        assert_eq!(sq.sequence_of(&x).unwrap(), seq);
        let c = XiCell::new(vec![vec![0, 0], vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(x.cell, CellId::Xi(c));
    }
}
