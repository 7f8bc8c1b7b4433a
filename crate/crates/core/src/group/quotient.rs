use std::collections::{BTreeMap, BTreeSet};

use super::{GroupElement, GroupPresentation, GroupStructure};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::simplicial::{
    euler_characteristic, f_vector, CellId, FiniteSet, SimplicialSet, Simplex, Window, XiCell,
    XiPower,
};

/// The finite simplicial set `Ξⁿ/G` together with the orbit
/// representative behind each of its cells.
///
/// Cells are named `c<dim>_<k>`, numbered in the order of their canonical
/// representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    structure: GroupStructure,
    set: FiniteSet,
    reps: BTreeMap<String, XiCell>,
    names: BTreeMap<XiCell, String>,
    stabilized: Vec<String>,
}

/// Builds `Ξⁿ/G` for a cocompact `G`.
///
/// Every orbit meets the cells whose first vertex lies in the fundamental
/// box of the translation lattice, so enumerating the closure of that box
/// and canonicalizing finds all of them.
pub fn quotient(group: &GroupPresentation) -> Result<Quotient> {
    let structure = group.structure();
    let lattice = structure.lattice();
    if !lattice.is_full_rank() {
        return Err(Error::NotCocompact {
            rank: lattice.rank(),
            n: group.n,
        });
    }
    let n = group.n;
    let hi: Vec<i64> = (0..n).map(|k| lattice.basis()[k][k]).collect();
    let window = Window::new(vec![0; n], hi);
    let xi = XiPower::new(n);
    let mut reps: BTreeMap<String, XiCell> = BTreeMap::new();
    let mut names: BTreeMap<XiCell, String> = BTreeMap::new();
    for d in 0..=n {
        let mut found = BTreeSet::new();
        for c in xi.cells(d, Some(&window))? {
            let CellId::Xi(c) = c else { unreachable!() };
            found.insert(structure.canonical_orbit_rep(&c)?);
        }
        for (k, r) in found.into_iter().enumerate() {
            let name = format!("c{d}_{k}");
            names.insert(r.clone(), name.clone());
            reps.insert(name, r);
        }
    }
    let mut records = Vec::new();
    let mut stabilized = Vec::new();
    for (name, r) in &reps {
        let d = r.dim();
        let faces = if d == 0 {
            Vec::new()
        } else {
            (0..=d)
                .map(|i| {
                    let f = structure.canonical_orbit_rep(&r.face(i))?;
                    Ok(Simplex::nondegenerate(CellId::Named(names[&f].clone()), d - 1))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if !structure.stabilizer(r)?.is_empty() {
            stabilized.push(name.clone());
        }
        records.push((name.clone(), d, faces));
    }
    Ok(Quotient {
        set: FiniteSet::new(records)?,
        structure,
        reps,
        names,
        stabilized,
    })
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn set(&self) -> &FiniteSet {
        &self.set
    }

    pub fn structure(&self) -> &GroupStructure {
        &self.structure
    }

    pub fn representative(&self, name: &str) -> Option<&XiCell> {
        self.reps.get(name)
    }

    pub fn representatives(&self) -> impl Iterator<Item = (&str, &XiCell)> {
        self.reps.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Quotient cell of a cell of `Ξⁿ`, and an element carrying the cell to
    /// its representative.
    pub fn cell_of(&self, x: &XiCell) -> Result<(String, GroupElement)> {
        let (rep, g) = self.structure.canonical_cell(x)?;
        let name = self
            .names
            .get(&rep)
            .cloned()
            .ok_or_else(|| Error::UnknownCell(rep.to_string()))?;
        Ok((name, g))
    }

    /// Cells whose representative is fixed by a non-identity element.
    pub fn stabilized_cells(&self) -> &[String] {
        &self.stabilized
    }

    pub fn f_vector(&self) -> Vec<usize> {
        f_vector(&self.set).expect("quotients are finite")
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(&self.set).expect("quotients are finite")
    }

    /// Coordinates of `(cell, t)` on the orbit representative in `ℝⁿ`.
    pub fn realize_rep(&self, x: &Simplex, t: &[Q]) -> Option<Vec<Q>> {
        let CellId::Named(name) = &x.cell else {
            return None;
        };
        let rep = self.reps.get(name)?;
        XiPower::new(self.dim()).realize(&x.with_cell(CellId::Xi(rep.clone())), t)
    }

    /// A simplex and coordinates (generally on its boundary) of the image
    /// of `p ∈ ℝⁿ`.
    pub fn locate(&self, p: &[Q]) -> Result<(Simplex, Vec<Q>)> {
        let (x, t) = XiPower::new(self.dim()).locate(p)?;
        let CellId::Xi(c) = &x.cell else { unreachable!() };
        let (name, _) = self.cell_of(c)?;
        Ok((x.with_cell(CellId::Named(name)), t))
    }
}

impl SimplicialSet for Quotient {
    fn cell_dim(&self, cell: &CellId) -> Result<usize> {
        self.set.cell_dim(cell)
    }

    fn cell_face(&self, cell: &CellId, i: usize) -> Result<Simplex> {
        self.set.cell_face(cell, i)
    }

    fn cells(&self, dim: usize, window: Option<&Window>) -> Result<Vec<CellId>> {
        self.set.cells(dim, window)
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn max_cell_dim(&self) -> usize {
        self.set.max_cell_dim()
    }

    fn coord_arity(&self) -> usize {
        0
    }

    fn realize(&self, _x: &Simplex, _t: &[Q]) -> Option<Vec<Q>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;
    use crate::simplicial::verify_identities;

    #[test]
    fn circle_is_one_vertex_one_loop() {
        let q = quotient(&GroupPresentation::translations(1)).unwrap();
        assert_eq!(q.f_vector(), vec![1, 1]);
        let e = q.set().faces_of("c1_0").unwrap();
        assert_eq!(e[0], e[1]);
    }

    #[test]
    fn torus_and_klein_bottle() {
        let t = quotient(&GroupPresentation::translations(2)).unwrap();
        assert_eq!(t.f_vector(), vec![1, 3, 2]);
        assert_eq!(t.euler_characteristic(), 0);
        assert!(t.stabilized_cells().is_empty());
        let k = quotient(&GroupPresentation::klein()).unwrap();
        assert_eq!(k.f_vector(), vec![1, 3, 2]);
        assert_eq!(k.euler_characteristic(), 0);
        assert!(k.stabilized_cells().is_empty());
        for q in [&t, &k] {
            assert!(verify_identities(q.set(), 4, None, None).unwrap().is_empty());
        }
    }

    #[test]
    fn three_torus() {
        let q = quotient(&GroupPresentation::translations(3)).unwrap();
        assert_eq!(q.f_vector(), vec![1, 7, 12, 6]);
        assert_eq!(q.euler_characteristic(), 0);
    }

    #[test]
    fn generating_set_does_not_matter() {
        let k = GroupPresentation::klein();
        let a = k.generator("a").unwrap().clone();
        let ab = k.evaluate(&parse_word("a b^-1").unwrap()).unwrap();
        let a2 = a.pow(2);
        let other = GroupPresentation::new(2, vec![("a".into(), a), ("c".into(), ab), ("d".into(), a2)]).unwrap();
        let q1 = quotient(&k).unwrap();
        let q2 = quotient(&other).unwrap();
        assert_eq!(q1.f_vector(), q2.f_vector());
        assert_eq!(q1.set(), q2.set());
    }

    #[test]
    fn rank_deficient_groups_are_rejected() {
        let a = GroupPresentation::klein().generators[0].clone();
        let g = GroupPresentation::new(2, vec![a]).unwrap();
        assert!(matches!(quotient(&g), Err(Error::NotCocompact { rank: 1, n: 2 })));
    }

    #[test]
    fn swap_quotient_flags_stabilizers() {
        let g = GroupPresentation::new(
            2,
            vec![
                ("s".into(), GroupElement::permutation(vec![1, 0]).unwrap()),
                ("e".into(), GroupElement::translation(vec![1, 0])),
            ],
        )
        .unwrap();
        let q = quotient(&g).unwrap();
        assert!(!q.stabilized_cells().is_empty());
        assert!(!g.structure().fixed_points().free);
    }
}
