//! Subgroups of `ℤⁿ⋊Σₙ`, their translation lattices, orbit
//! canonicalization on `Ξⁿ` and the finite quotients `Ξⁿ/G`.
//!
//! Group files:
//!
//! ```text
//! dim 2
//! gen a perm 2 1 trans 1 0
//! gen b perm 2 1 trans 0 1
//! rel a^2 b^-2
//! ```

mod element;
mod lattice;
mod quotient;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use element::GroupElement;
pub use lattice::Lattice;
pub use quotient::{quotient, Quotient};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Q;
use crate::simplicial::XiCell;

/// A word in named generators: `(name, exponent)` pairs, leftmost first.
pub type Word = Vec<(String, i64)>;

/// Parses `a^2 b^-2`, `a b b`, `b^-1`.
pub fn parse_word(s: &str) -> Result<Word> {
    s.split_whitespace()
        .map(|tok| {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| Error::parse(0, format!("bad exponent in `{tok}`")))?,
                ),
                None => (tok, 1),
            };
            if name.is_empty() {
                return Err(Error::parse(0, format!("bad word token `{tok}`")));
            }
            Ok((name.to_string(), exp))
        })
        .collect()
}

pub fn format_word(w: &Word) -> String {
    w.iter()
        .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// A finitely generated subgroup of `ℤⁿ⋊Σₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub n: usize,
    pub generators: Vec<(String, GroupElement)>,
    pub relations: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(n: usize, generators: Vec<(String, GroupElement)>) -> Result<Self> {
        for (name, g) in &generators {
            if g.dim() != n {
                return Err(Error::dims(format!("generator `{name}`"), n, g.dim()));
            }
        }
        Ok(GroupPresentation {
            n,
            generators,
            relations: Vec::new(),
        })
    }

    /// `ℤⁿ` generated by the unit translations `e1 … en`.
    pub fn translations(n: usize) -> Self {
        let gens = (0..n)
            .map(|i| {
                let v = (0..n).map(|j| i64::from(i == j)).collect();
                (format!("e{}", i + 1), GroupElement::translation(v))
            })
            .collect();
        GroupPresentation::new(n, gens).expect("consistent dimensions")
    }

    /// The Klein bottle group `⟨α, β⟩` with `α(x, y) = (y + 1, x)` and
    /// `β(x, y) = (y, x + 1)`, subject to `α² β⁻²`.
    pub fn klein() -> Self {
        let mut g = GroupPresentation::new(
            2,
            vec![
                ("a".into(), GroupElement::new(vec![1, 0], vec![1, 0]).unwrap()),
                ("b".into(), GroupElement::new(vec![1, 0], vec![0, 1]).unwrap()),
            ],
        )
        .unwrap();
        g.relations.push(vec![("a".into(), 2), ("b".into(), -2)]);
        g
    }

    pub fn generator(&self, name: &str) -> Result<&GroupElement> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn evaluate(&self, word: &Word) -> Result<GroupElement> {
        let mut acc = GroupElement::identity(self.n);
        for (name, e) in word {
            acc = acc.compose(&self.generator(name)?.pow(*e))?;
        }
        Ok(acc)
    }

    /// Whether the word evaluates to the identity.
    pub fn verify_relation(&self, word: &Word) -> Result<bool> {
        Ok(self.evaluate(word)?.is_identity())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut gens = Vec::new();
        let mut rels = Vec::new();
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
                    let d = toks
                        .get(1)
                        .filter(|_| toks.len() == 2)
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `dim <n>`"))?;
                    n = Some(d);
                }
                "gen" => {
                    let d = n.ok_or_else(|| Error::parse(line_no, "`gen` before `dim`"))?;
                    let name = toks
                        .get(1)
                        .ok_or_else(|| Error::parse(line_no, "missing generator name"))?;
                    if name.contains('^') {
                        return Err(Error::parse(line_no, "generator names may not contain `^`"));
                    }
                    if gens.iter().any(|(g, _): &(String, GroupElement)| g == name) {
                        return Err(Error::parse(line_no, format!("duplicate generator `{name}`")));
                    }
                    let g = GroupElement::parse_fields(d, &toks[2..])
                        .map_err(|m| Error::parse(line_no, m))?;
                    gens.push((name.to_string(), g));
                }
                "rel" => {
                    let w = parse_word(&toks[1..].join(" ")).map_err(|e| match e {
                        Error::Parse { message, .. } => Error::parse(line_no, message),
                        other => other,
                    })?;
                    rels.push((line_no, w));
                }
                other => return Err(Error::parse(line_no, format!("unknown record `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing `dim` line"))?;
        let mut g = GroupPresentation::new(n, gens)?;
        for (line_no, w) in rels {
            for (name, _) in &w {
                if g.generator(name).is_err() {
                    return Err(Error::parse(line_no, format!("unknown generator `{name}`")));
                }
            }
            g.relations.push(w);
        }
        Ok(g)
    }

    pub fn export(&self) -> String {
        let mut s = format!("dim {}\n", self.n);
        for (name, g) in &self.generators {
            let _ = writeln!(s, "gen {name} {g}");
        }
        for r in &self.relations {
            let _ = writeln!(s, "rel {}", format_word(r));
        }
        s
    }

    /// Point group, coset representatives and translation lattice.
    pub fn structure(&self) -> GroupStructure {
        GroupStructure::new(self)
    }
}

/// The extension `T → G → P` of a point group `P ≤ Σₙ` by the lattice of
/// pure translations `T = G ∩ ℤⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStructure {
    n: usize,
    /// One element of `G` over each permutation in the point group,
    /// identity first.
    cosets: Vec<GroupElement>,
    lattice: Lattice,
}

impl GroupStructure {
    /// Builds a transversal of `G/T` by breadth-first search over the point
    /// group and collects the Schreier generators `rep(π) · h · rep(πh)⁻¹`,
    /// which generate `T` exactly.
    fn new(g: &GroupPresentation) -> Self {
        let n = g.n;
        let mut reps: BTreeMap<Vec<usize>, GroupElement> = BTreeMap::new();
        let id = GroupElement::identity(n);
        reps.insert(id.perm().to_vec(), id.clone());
        let mut queue = vec![id];
        let mut translations: Vec<Vec<i64>> = Vec::new();
        let mut head = 0;
        while head < queue.len() {
            let r = queue[head].clone();
            head += 1;
            for (_, h) in &g.generators {
                let p = r.compose(h).expect("same dimension");
                match reps.get(p.perm()) {
                    None => {
                        reps.insert(p.perm().to_vec(), p.clone());
                        queue.push(p);
                    }
                    Some(rep) => {
                        let s = p.compose(&rep.inverse()).expect("same dimension");
                        debug_assert!(s.is_translation());
                        if !s.is_identity() {
                            translations.push(s.trans().to_vec());
                        }
                    }
                }
            }
        }
        let lattice = Lattice::from_generators(n, &translations);
        let mut cosets: Vec<GroupElement> = queue
            .into_iter()
            .map(|r| match lattice.reduce(r.trans()) {
                Ok((v, _)) => GroupElement::new(r.perm().to_vec(), v).expect("valid"),
                Err(_) => r,
            })
            .collect();
        cosets[1..].sort();
        GroupStructure { n, cosets, lattice }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn cosets(&self) -> &[GroupElement] {
        &self.cosets
    }

    pub fn point_group_order(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_cocompact(&self) -> bool {
        self.lattice.is_full_rank()
    }

    fn require_cocompact(&self) -> Result<()> {
        if self.is_cocompact() {
            Ok(())
        } else {
            Err(Error::NotCocompact {
                rank: self.lattice.rank(),
                n: self.n,
            })
        }
    }

    /// Whether `g` belongs to the group.
    pub fn contains(&self, g: &GroupElement) -> bool {
        self.cosets.iter().any(|c| {
            c.perm() == g.perm() && {
                let d: Vec<i64> = g.trans().iter().zip(c.trans()).map(|(a, b)| a - b).collect();
                self.lattice.contains(&d)
            }
        })
    }

    /// Canonical representative of the orbit of `x`, and an element
    /// carrying `x` to it.
    ///
    /// Each point-group translate is reduced into the fundamental box of
    /// the lattice; the lexicographically least result is chosen.
    pub fn canonical_cell(&self, x: &XiCell) -> Result<(XiCell, GroupElement)> {
        self.require_cocompact()?;
        if x.arity() != self.n {
            return Err(Error::dims("cell arity", self.n, x.arity()));
        }
        let mut best: Option<(XiCell, GroupElement)> = None;
        for c in &self.cosets {
            let y = c.act(x)?;
            let (_, shift) = self.lattice.reduce(y.base())?;
            let back: Vec<i64> = shift.iter().map(|s| -s).collect();
            let z = y.translate(&back);
            let g = GroupElement::translation(back).compose(c)?;
            if best.as_ref().map_or(true, |(b, _)| z < *b) {
                best = Some((z, g));
            }
        }
        Ok(best.expect("point group contains the identity"))
    }

    pub fn canonical_orbit_rep(&self, x: &XiCell) -> Result<XiCell> {
        Ok(self.canonical_cell(x)?.0)
    }

    /// Non-identity group elements mapping `x` onto itself.
    pub fn stabilizer(&self, x: &XiCell) -> Result<Vec<GroupElement>> {
        let mut out = Vec::new();
        for c in &self.cosets {
            let y = c.act(x)?;
            let shift: Vec<i64> = x.base().iter().zip(y.base()).map(|(a, b)| a - b).collect();
            if y.translate(&shift) == *x && self.lattice.contains(&shift) {
                let g = GroupElement::translation(shift).compose(c)?;
                if !g.is_identity() {
                    out.push(g);
                }
            }
        }
        Ok(out)
    }

    /// Decides whether some non-identity element fixes a point of `ℝⁿ`.
    ///
    /// `(σ, v)` fixes a point iff `v ∈ im(σ − 1)`, i.e. iff `v` sums to zero
    /// over every cycle of `σ`. Within the coset of `(σ, v)` this asks
    /// whether the cycle sums of `v` lie in the image of `T`, an integer
    /// lattice membership question, so the answer is exact.
    pub fn fixed_points(&self) -> FixedPointReport {
        for c in &self.cosets {
            if c.is_translation() {
                continue;
            }
            let cycles = cycles(c.perm());
            let map: Vec<Vec<i64>> = cycles
                .iter()
                .map(|cy| (0..self.n).map(|i| i64::from(cy.contains(&i))).collect())
                .collect();
            let target: Vec<i64> = map
                .iter()
                .map(|f| -f.iter().zip(c.trans()).map(|(a, b)| a * b).sum::<i64>())
                .collect();
            if let Some(t) = self.lattice.preimage_in(&map, &target) {
                let g = GroupElement::translation(t).compose(c).expect("same dimension");
                let point = fixed_point(&g).expect("cycle sums vanish");
                return FixedPointReport {
                    free: false,
                    witness: Some((g, point)),
                };
            }
        }
        FixedPointReport {
            free: true,
            witness: None,
        }
    }
}

/// Outcome of the fixed-point test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointReport {
    pub free: bool,
    /// A non-identity element and a point it fixes.
    pub witness: Option<(GroupElement, Vec<Q>)>,
}

fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut cy = Vec::new();
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            cy.push(j);
            j = perm[j];
        }
        out.push(cy);
    }
    out
}

/// A solution of `σ·x + v = x`, if any.
pub fn fixed_point(g: &GroupElement) -> Option<Vec<Q>> {
    let n = g.dim();
    // row p of (σ − 1): (σx)_p = x_{σ⁻¹(p)}
    let mut a = vec![vec![Q::from_integer(0.into()); n]; n];
    for (j, &p) in g.perm().iter().enumerate() {
        a[p][j] += Q::from_integer(1.into());
        a[p][p] -= Q::from_integer(1.into());
    }
    let b: Vec<Q> = g.trans().iter().map(|&t| Q::from_integer((-t).into())).collect();
    linalg::solve(&a, &b)
}
