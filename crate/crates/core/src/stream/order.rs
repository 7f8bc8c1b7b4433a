//! Region preorders by up-set propagation.
//!
//! Inside one closed simplex the order is coordinatewise on `∇[m]`, which
//! is a lattice, so the part of a simplex reachable from a set of points is
//! the up-set of finitely many generators. Reachability is propagated
//! between simplices in two directions:
//!
//! - down to a facet: the up-set of `a` meets the facet opposite vertex
//!   `k` in a least point (`t₁ := 1`, `t_{k+1} := t_k`, or `a` itself when
//!   `t_m = 0`), which becomes a generator of the facet's carrier;
//! - up to a coface: a canonical point of a cell enters every simplex
//!   having that cell as a face, at the least point of its fibre.
//!
//! New coordinates are always copies of old ones or 0/1, so propagation
//! terminates. Each derived relation carries a chain of single-simplex
//! comparisons as its witness.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{barycentric, canonicalize_point, from_barycentric, simplex_leq, Region, StreamPoint};
use crate::error::{Error, Result};
use crate::rational::{ceil_i64, floor_i64, Q};
use crate::simplicial::{CellId, SimplicialSet, Simplex, Window};

/// One comparison `from ≤ to` inside the closed simplex `cell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessStep {
    pub cell: Simplex,
    pub from: Vec<Q>,
    pub to: Vec<Q>,
}

/// The preorder induced on a finite sample of a region.
#[derive(Clone, Debug)]
pub struct RegionOrder {
    pub region: Region,
    pub samples: Vec<StreamPoint>,
    relation: Vec<Vec<bool>>,
    witnesses: BTreeMap<(usize, usize), Vec<WitnessStep>>,
}

impl RegionOrder {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.relation[i][j]
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.relation
    }

    /// Chain of single-simplex comparisons from sample `i` to sample `j`
    /// (empty for `i == j`).
    pub fn witness(&self, i: usize, j: usize) -> Option<&[WitnessStep]> {
        if i == j {
            return Some(&[]);
        }
        self.witnesses.get(&(i, j)).map(Vec::as_slice)
    }

    /// Reflexive and transitive.
    pub fn is_preorder(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.relation[i][i])
            && (0..n).all(|i| {
                (0..n).all(|j| !self.relation[i][j] || (0..n).all(|k| !self.relation[j][k] || self.relation[i][k]))
            })
    }

    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.relation[i][j] || self.relation[j][i]))
    }

    /// Replays every witness chain: each step must be a coordinatewise
    /// comparison in its simplex, consecutive steps must meet in the same
    /// canonical point, and the chain must run between the two samples.
    pub fn check_witnesses<S: SimplicialSet + ?Sized>(&self, s: &S) -> Result<bool> {
        for (&(i, j), chain) in &self.witnesses {
            let mut at = self.samples[i].clone();
            for step in chain {
                if !simplex_leq(&step.from, &step.to)? {
                    return Ok(false);
                }
                if canonicalize_point(s, &step.cell, &step.from)? != at {
                    return Ok(false);
                }
                at = canonicalize_point(s, &step.cell, &step.to)?;
            }
            if at != self.samples[j] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

struct Coface {
    sigma: usize,
    keep: Vec<usize>,
    eta: Vec<usize>,
}

/// The cells relevant to a region, with their coface incidences.
struct Complex<'a, S: ?Sized> {
    s: &'a S,
    region: &'a Region,
    cells: Vec<Simplex>,
    index: HashMap<CellId, usize>,
    cofaces: Vec<Vec<Coface>>,
}

fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << (m + 1)) - 1).map(move |mask| (0..=m).filter(|&k| mask & (1 << k) != 0).collect())
}

impl<'a, S: SimplicialSet + ?Sized> Complex<'a, S> {
    fn new(s: &'a S, region: &'a Region) -> Result<Self> {
        let ids: Vec<CellId> = match region {
            Region::Whole => {
                if !s.is_finite() {
                    return Err(Error::UnsupportedRegion(
                        "the whole realization of an infinite presentation; use a window".into(),
                    ));
                }
                all_cells(s, None)?
            }
            Region::Window { lo, hi } => {
                if s.coord_arity() == 0 || s.coord_arity() != lo.len() {
                    return Err(Error::UnsupportedRegion(format!(
                        "a {}-dimensional window on a presentation with {} realization coordinates",
                        lo.len(),
                        s.coord_arity()
                    )));
                }
                let w = Window::new(lo.iter().map(floor_i64).collect(), hi.iter().map(ceil_i64).collect());
                all_cells(s, Some(&w))?
            }
            Region::Star(c) => {
                let cd = s.cell_dim(c)?;
                let pool = if s.is_finite() {
                    all_cells(s, None)?
                } else {
                    let w = star_window(s, c, cd)?;
                    all_cells(s, Some(&w))?
                };
                let mut out = Vec::new();
                for id in pool {
                    let x = s.simplex(&id)?;
                    if has_face(s, &x, c)? {
                        out.push(id);
                    }
                }
                out
            }
        };
        let mut cells = Vec::with_capacity(ids.len());
        let mut index = HashMap::new();
        for id in ids {
            index.insert(id.clone(), cells.len());
            cells.push(s.simplex(&id)?);
        }
        let mut cofaces: Vec<Vec<Coface>> = (0..cells.len()).map(|_| Vec::new()).collect();
        for (sigma, x) in cells.iter().enumerate() {
            if x.dim() == 0 {
                continue;
            }
            for keep in subsets(x.dim()) {
                let f = s.face_on(x, &keep)?;
                if let Some(&rho) = index.get(&f.cell) {
                    cofaces[rho].push(Coface {
                        sigma,
                        keep,
                        eta: f.surjection(),
                    });
                }
            }
        }
        Ok(Complex {
            s,
            region,
            cells,
            index,
            cofaces,
        })
    }

    fn contains(&self, p: &StreamPoint) -> Result<bool> {
        match self.region {
            Region::Whole => Ok(true),
            Region::Window { lo, hi } => {
                let v = self.s.realize(&p.cell, &p.coords).ok_or_else(|| {
                    Error::UnsupportedRegion("presentation has no realization coordinates".into())
                })?;
                Ok(v.iter().zip(lo.iter().zip(hi)).all(|(x, (l, h))| l < x && x < h))
            }
            Region::Star(c) => has_face(self.s, &p.cell, c),
        }
    }
}

fn all_cells<S: SimplicialSet + ?Sized>(s: &S, w: Option<&Window>) -> Result<Vec<CellId>> {
    let mut out = Vec::new();
    for d in 0..=s.max_cell_dim() {
        out.extend(s.cells(d, w)?);
    }
    Ok(out)
}

/// Integer box one unit around the vertices of `c`.
fn star_window<S: SimplicialSet + ?Sized>(s: &S, c: &CellId, cd: usize) -> Result<Window> {
    let x = s.simplex(c)?;
    let mut lo: Option<Vec<i64>> = None;
    let mut hi: Option<Vec<i64>> = None;
    for k in 0..=cd {
        let v = s.face_on(&x, &[k])?;
        let p = s
            .realize(&v, &[])
            .ok_or_else(|| Error::UnsupportedRegion("star of a cell without coordinates".into()))?;
        let p: Vec<i64> = p.iter().map(floor_i64).collect();
        lo = Some(match lo {
            None => p.clone(),
            Some(l) => l.iter().zip(&p).map(|(a, b)| *a.min(b)).collect(),
        });
        hi = Some(match hi {
            None => p,
            Some(h) => h.iter().zip(&p).map(|(a, b)| *a.max(b)).collect(),
        });
    }
    let lo = lo.expect("cells have a vertex").iter().map(|v| v - 1).collect();
    let hi = hi.expect("cells have a vertex").iter().map(|v| v + 1).collect();
    Ok(Window::new(lo, hi))
}

fn has_face<S: SimplicialSet + ?Sized>(s: &S, x: &Simplex, c: &CellId) -> Result<bool> {
    if x.cell == *c {
        return Ok(true);
    }
    for keep in subsets(x.dim()) {
        if s.face_on(x, &keep)?.cell == *c {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Least point of the up-set of `a` on the facet opposite vertex `k`.
fn least_on_facet(a: &[Q], k: usize) -> Option<Vec<Q>> {
    let m = a.len();
    if m == 0 {
        return None;
    }
    let mut l = a.to_vec();
    if k == 0 {
        l[0] = Q::one();
    } else if k == m {
        if !a[m - 1].is_zero() {
            return None;
        }
    } else {
        l[k] = a[k - 1].clone();
    }
    Some(l)
}

enum Via {
    Start,
    Enter,
    Push { from: Vec<Q>, to: Vec<Q> },
}

struct Gen {
    cell: usize,
    point: Vec<Q>,
    canonical: bool,
    parent: Option<usize>,
    via: Via,
}

struct Propagation {
    gens: Vec<Gen>,
    by_cell: Vec<Vec<usize>>,
}

impl Propagation {
    fn add(&mut self, g: Gen, queue: &mut Vec<usize>) {
        let dominated = self.by_cell[g.cell].iter().any(|&h| {
            let h = &self.gens[h];
            (h.canonical || !g.canonical) && h.point.iter().zip(&g.point).all(|(a, b)| a <= b)
        });
        if dominated {
            return;
        }
        let id = self.gens.len();
        self.by_cell[g.cell].push(id);
        self.gens.push(g);
        queue.push(id);
    }

    fn run<S: SimplicialSet + ?Sized>(cx: &Complex<'_, S>, start: &StreamPoint) -> Result<Self> {
        let mut p = Propagation {
            gens: Vec::new(),
            by_cell: (0..cx.cells.len()).map(|_| Vec::new()).collect(),
        };
        let mut queue = Vec::new();
        p.add(
            Gen {
                cell: cx.index[&start.cell.cell],
                point: start.coords.clone(),
                canonical: true,
                parent: None,
                via: Via::Start,
            },
            &mut queue,
        );
        let mut head = 0;
        while head < queue.len() {
            let id = queue[head];
            head += 1;
            let cell = p.gens[id].cell;
            let point = p.gens[id].point.clone();
            if p.gens[id].canonical {
                let lambda = barycentric(&point);
                for cf in &cx.cofaces[cell] {
                    let m = cx.cells[cf.sigma].dim();
                    let mut mu = vec![Q::zero(); m + 1];
                    for (i, &k) in cf.keep.iter().enumerate() {
                        if i == 0 || cf.eta[i] != cf.eta[i - 1] {
                            mu[k] = lambda[cf.eta[i]].clone();
                        }
                    }
                    p.add(
                        Gen {
                            cell: cf.sigma,
                            point: from_barycentric(&mu),
                            canonical: false,
                            parent: Some(id),
                            via: Via::Enter,
                        },
                        &mut queue,
                    );
                }
            }
            let sigma = &cx.cells[cell];
            for k in 0..=point.len() {
                let Some(l) = least_on_facet(&point, k) else {
                    continue;
                };
                let q = canonicalize_point(cx.s, sigma, &l)?;
                if !cx.contains(&q)? {
                    continue;
                }
                let Some(&target) = cx.index.get(&q.cell.cell) else {
                    continue;
                };
                p.add(
                    Gen {
                        cell: target,
                        point: q.coords,
                        canonical: true,
                        parent: Some(id),
                        via: Via::Push {
                            from: point.clone(),
                            to: l,
                        },
                    },
                    &mut queue,
                );
            }
        }
        Ok(p)
    }

    /// A generator of `target`'s cell below it, if any.
    fn reach(&self, cx_cell: usize, target: &[Q]) -> Option<usize> {
        self.by_cell[cx_cell]
            .iter()
            .copied()
            .find(|&h| self.gens[h].point.iter().zip(target).all(|(a, b)| a <= b))
    }

    fn chain(&self, cells: &[Simplex], mut id: usize, target: &[Q]) -> Vec<WitnessStep> {
        let mut steps = vec![WitnessStep {
            cell: cells[self.gens[id].cell].clone(),
            from: self.gens[id].point.clone(),
            to: target.to_vec(),
        }];
        loop {
            let g = &self.gens[id];
            let Some(parent) = g.parent else { break };
            if let Via::Push { from, to } = &g.via {
                steps.push(WitnessStep {
                    cell: cells[self.gens[parent].cell].clone(),
                    from: from.clone(),
                    to: to.clone(),
                });
            }
            id = parent;
        }
        debug_assert!(matches!(self.gens[id].via, Via::Start));
        steps.reverse();
        steps
    }
}

/// The preorder that the region induces on `samples`.
///
/// Every asserted relation is witnessed by a chain of comparisons inside
/// single closed simplices of the region, so the result is sound. For
/// windows on `Ξⁿ` and its products, and for the whole of a finite
/// presentation, propagation reaches every point above the source; stars
/// may miss relations that leave the star's closure and re-enter it.
pub fn region_order<S: SimplicialSet + ?Sized>(
    s: &S,
    region: &Region,
    samples: &[StreamPoint],
) -> Result<RegionOrder> {
    let cx = Complex::new(s, region)?;
    let mut pts = Vec::with_capacity(samples.len());
    for (index, x) in samples.iter().enumerate() {
        let p = canonicalize_point(s, &x.cell, &x.coords)?;
        if !cx.contains(&p)? || !cx.index.contains_key(&p.cell.cell) {
            return Err(Error::SampleOutsideRegion { index });
        }
        pts.push(p);
    }
    let n = pts.len();
    let mut relation = vec![vec![false; n]; n];
    let mut witnesses = BTreeMap::new();
    for i in 0..n {
        let prop = Propagation::run(&cx, &pts[i])?;
        for j in 0..n {
            if i == j {
                relation[i][j] = true;
                continue;
            }
            let cell = cx.index[&pts[j].cell.cell];
            if let Some(h) = prop.reach(cell, &pts[j].coords) {
                relation[i][j] = true;
                witnesses.insert((i, j), prop.chain(&cx.cells, h, &pts[j].coords));
            }
        }
    }
    // close transitively, concatenating witnesses
    for k in 0..n {
        for i in 0..n {
            if i == k || !relation[i][k] {
                continue;
            }
            for j in 0..n {
                if j == i || j == k || relation[i][j] || !relation[k][j] {
                    continue;
                }
                relation[i][j] = true;
                let mut w = witnesses[&(i, k)].clone();
                w.extend(witnesses[&(k, j)].iter().cloned());
                witnesses.insert((i, j), w);
            }
        }
    }
    Ok(RegionOrder {
        region: region.clone(),
        samples: pts,
        relation,
        witnesses,
    })
}
