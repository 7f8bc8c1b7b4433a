//! The conal preorder on `ℝⁿ/G` computed directly in `ℝⁿ`.
//!
//! Elements of `G` permute coordinates and translate, so they preserve the
//! coordinatewise order and every cone-directed path lifts. Over the whole
//! space `[x] ≤ [y]` iff some lift `g·y` dominates `x`. Inside an open box
//! `W`, reachability from `x` is a finite union of up-sets
//! `{z ∈ W : z ≥ a}` (some bounds strict), closed under the elements `g`
//! with `gW ∩ W ≠ ∅`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupStructure};
use crate::rational::{ceil_i64, floor_i64, Q};

/// Where the oracle looks for paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleRegion {
    Whole,
    /// Open box `Π (lo_i, hi_i)` in `ℝⁿ`.
    Window { lo: Vec<Q>, hi: Vec<Q> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAnswer {
    pub related: bool,
    /// In whole-space mode, an element with `x ≤ g·y`.
    pub lift: Option<GroupElement>,
}

const MAX_GENERATORS: usize = 20_000;

/// Decides `[x] ≤ [y]` in the region.
pub fn quotient_order_oracle(
    g: &GroupStructure,
    x: &[Q],
    y: &[Q],
    region: &OracleRegion,
) -> Result<OracleAnswer> {
    let n = g.dim();
    for p in [x, y] {
        if p.len() != n {
            return Err(Error::dims("oracle point arity", n, p.len()));
        }
    }
    let Some(index) = g.lattice().index() else {
        return Err(Error::NotCocompact {
            rank: g.lattice().rank(),
            n,
        });
    };
    match region {
        OracleRegion::Whole => Ok(whole(g, x, y, index)),
        OracleRegion::Window { lo, hi } => window(g, x, y, lo, hi),
    }
}

/// `N·ℤⁿ ⊆ T` for `N = [ℤⁿ : T]`, so rounding `x − c·y` up to multiples of
/// `N` gives a dominating lift over every coset; the relation is total.
fn whole(g: &GroupStructure, x: &[Q], y: &[Q], index: i64) -> OracleAnswer {
    let c = &g.cosets()[0];
    let cy = c.apply(y);
    let nq = Q::from_integer(BigInt::from(index));
    let t: Vec<i64> = x
        .iter()
        .zip(&cy)
        .map(|(a, b)| index * ceil_i64(&((a - b) / &nq)))
        .collect();
    debug_assert!(t.iter().all(|v| v.mod_floor(&index) == 0));
    let lift = GroupElement::translation(t).compose(c).expect("same dimension");
    OracleAnswer {
        related: true,
        lift: Some(lift),
    }
}

#[derive(Clone)]
struct UpSet {
    corner: Vec<Q>,
    strict: Vec<bool>,
}

impl UpSet {
    fn contains(&self, z: &[Q]) -> bool {
        z.iter()
            .zip(&self.corner)
            .zip(&self.strict)
            .all(|((z, a), &s)| if s { z > a } else { z >= a })
    }

    fn within(&self, other: &UpSet) -> bool {
        (0..self.corner.len()).all(|i| {
            other.corner[i] < self.corner[i]
                || (other.corner[i] == self.corner[i] && (!other.strict[i] || self.strict[i]))
        })
    }
}

/// Elements moving the window onto itself at least partly, with the image
/// boxes.
fn moves(g: &GroupStructure, lo: &[Q], hi: &[Q]) -> Result<Vec<(GroupElement, Vec<Q>, Vec<Q>)>> {
    let mut out = Vec::new();
    for c in g.cosets() {
        let clo = c.apply(lo);
        let chi = c.apply(hi);
        let tlo: Vec<i64> = lo.iter().zip(&chi).map(|(l, h)| floor_i64(&(l - h))).collect();
        let thi: Vec<i64> = hi.iter().zip(&clo).map(|(h, l)| ceil_i64(&(h - l))).collect();
        for t in g.lattice().points_in_box(&tlo, &thi)? {
            let tq: Vec<Q> = t.iter().map(|&v| Q::from_integer(v.into())).collect();
            let glo: Vec<Q> = clo.iter().zip(&tq).map(|(a, b)| a + b).collect();
            let ghi: Vec<Q> = chi.iter().zip(&tq).map(|(a, b)| a + b).collect();
            let meets = (0..lo.len()).all(|i| glo[i] < hi[i] && lo[i] < ghi[i]);
            let e = GroupElement::translation(t).compose(c)?;
            if meets && !e.is_identity() {
                out.push((e, glo, ghi));
            }
        }
    }
    Ok(out)
}

fn window(g: &GroupStructure, x: &[Q], y: &[Q], lo: &[Q], hi: &[Q]) -> Result<OracleAnswer> {
    let n = g.dim();
    if lo.len() != n || hi.len() != n {
        return Err(Error::dims("oracle window arity", n, lo.len().min(hi.len())));
    }
    let inside = |p: &[Q]| (0..n).all(|i| lo[i] < p[i] && p[i] < hi[i]);
    if !inside(x) {
        return Err(Error::SampleOutsideRegion { index: 0 });
    }
    if !inside(y) {
        return Err(Error::SampleOutsideRegion { index: 1 });
    }
    let moves = moves(g, lo, hi)?;
    let mut gens = vec![UpSet {
        corner: x.to_vec(),
        strict: vec![false; n],
    }];
    let mut head = 0;
    while head < gens.len() {
        if gens[head].contains(y) {
            return Ok(OracleAnswer {
                related: true,
                lift: None,
            });
        }
        let u = gens[head].clone();
        head += 1;
        for (e, glo, ghi) in &moves {
            let corner = e.apply(&u.corner);
            let mut strict = vec![false; n];
            for (j, &p) in e.perm().iter().enumerate() {
                strict[p] = u.strict[j];
            }
            let mut b = Vec::with_capacity(n);
            let mut empty = false;
            for i in 0..n {
                let mut c = corner[i].clone();
                let mut s = strict[i];
                for bound in [&lo[i], &glo[i]] {
                    if *bound > c {
                        c = bound.clone();
                        s = true;
                    } else if *bound == c {
                        s = true;
                    }
                }
                let top = if hi[i] < ghi[i] { &hi[i] } else { &ghi[i] };
                if c >= *top {
                    empty = true;
                }
                b.push(c);
                strict[i] = s;
            }
            if empty {
                continue;
            }
            let v = UpSet { corner: b, strict };
            if gens.iter().any(|h| v.within(h)) {
                continue;
            }
            if gens.len() >= MAX_GENERATORS {
                return Err(Error::SearchExhausted(format!(
                    "window oracle stopped after {MAX_GENERATORS} up-sets"
                )));
            }
            gens.push(v);
        }
    }
    Ok(OracleAnswer {
        related: false,
        lift: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupPresentation;
    use crate::rational::{q, qi};

    fn unit_box() -> OracleRegion {
        OracleRegion::Window {
            lo: vec![qi(0), qi(0)],
            hi: vec![qi(1), qi(1)],
        }
    }

    #[test]
    fn torus_whole_space_is_total() {
        let g = GroupPresentation::translations(2).structure();
        let x = [q(1, 10), q(9, 10)];
        let y = [q(2, 10), q(1, 10)];
        let a = quotient_order_oracle(&g, &x, &y, &OracleRegion::Whole).unwrap();
        assert!(a.related);
        let ly = a.lift.unwrap().apply(&y);
        assert!(x.iter().zip(&ly).all(|(a, b)| a <= b));
    }

    #[test]
    fn klein_lifts_dominate() {
        let g = GroupPresentation::klein().structure();
        let x = [q(7, 8), q(1, 3)];
        let y = [q(1, 5), q(3, 4)];
        for (a, b) in [(&x, &y), (&y, &x)] {
            let ans = quotient_order_oracle(&g, a, b, &OracleRegion::Whole).unwrap();
            let lb = ans.lift.clone().unwrap().apply(b);
            assert!(a.iter().zip(&lb).all(|(p, q)| p <= q));
            assert!(g.contains(ans.lift.as_ref().unwrap()));
        }
    }

    #[test]
    fn unit_window_is_the_product_order() {
        let g = GroupPresentation::translations(2).structure();
        let x = [q(1, 4), q(1, 4)];
        let y = [q(1, 8), q(3, 4)];
        assert!(!quotient_order_oracle(&g, &x, &y, &unit_box()).unwrap().related);
        assert!(quotient_order_oracle(&g, &x, &x, &unit_box()).unwrap().related);
        let z = [q(1, 2), q(1, 2)];
        assert!(quotient_order_oracle(&g, &x, &z, &unit_box()).unwrap().related);
    }

    #[test]
    fn wider_window_wraps_around() {
        // (0.9, 0.5) ≤ (1.1, 0.6) ≡ (0.1, 0.6) only through the overlap
        let g = GroupPresentation::translations(2).structure();
        let w = OracleRegion::Window {
            lo: vec![qi(0), qi(0)],
            hi: vec![q(3, 2), qi(1)],
        };
        let x = [q(9, 10), q(1, 2)];
        let y = [q(1, 10), q(3, 5)];
        assert!(quotient_order_oracle(&g, &x, &y, &w).unwrap().related);
        assert!(!quotient_order_oracle(&g, &x, &y, &unit_box()).unwrap().related);
        assert!(quotient_order_oracle(&g, &y, &[q(1, 20), q(7, 10)], &w).unwrap().related);
        assert!(!quotient_order_oracle(&g, &y, &[q(1, 20), q(1, 2)], &w).unwrap().related);
    }

    #[test]
    fn outside_points_are_rejected() {
        let g = GroupPresentation::translations(2).structure();
        let r = quotient_order_oracle(&g, &[qi(2), qi(0)], &[q(1, 2), q(1, 2)], &unit_box());
        assert!(matches!(r, Err(Error::SampleOutsideRegion { index: 0 })));
    }
}
