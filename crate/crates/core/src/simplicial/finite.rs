//! Finite simplicial sets given by a table of nondegenerate cells.
//!
//! Text format, one record per line:
//!
//! ```text
//! cell <id> dim <n>
//! face <i> <cell-id> deg <j1,j2,...>
//! ```
//!
//! `face` lines belong to the most recent `cell` line and the degeneracy
//! list may be empty. Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::cell::valid_name;
use super::{validate_deg_word, CellId, SimplicialSet, Simplex, Window};
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry {
    dim: usize,
    faces: Vec<Simplex>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteSet {
    cells: BTreeMap<String, Entry>,
}

impl FiniteSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a table from `(name, dim, faces)` records. Face references
    /// are checked for existence, dimension and normal form; the simplicial
    /// identities are not (see [`super::verify_identities`]).
    pub fn new(records: Vec<(String, usize, Vec<Simplex>)>) -> Result<Self> {
        let mut cells = BTreeMap::new();
        for (name, dim, faces) in records {
            if !valid_name(&name) {
                return Err(Error::InvalidCell(format!("bad cell name `{name}`")));
            }
            if cells.insert(name.clone(), Entry { dim, faces }).is_some() {
                return Err(Error::InvalidCell(format!("duplicate cell `{name}`")));
            }
        }
        let set = FiniteSet { cells };
        set.check()?;
        Ok(set)
    }

    fn check(&self) -> Result<()> {
        for (name, e) in &self.cells {
            let expected = if e.dim == 0 { 0 } else { e.dim + 1 };
            if e.faces.len() != expected {
                return Err(Error::InvalidCell(format!(
                    "cell `{name}` of dimension {} has {} faces",
                    e.dim,
                    e.faces.len()
                )));
            }
            for f in &e.faces {
                let CellId::Named(target) = &f.cell else {
                    return Err(Error::InvalidCell(format!("face of `{name}` is not a table cell")));
                };
                let t = self
                    .cells
                    .get(target)
                    .ok_or_else(|| Error::UnknownCell(target.clone()))?;
                if t.dim != f.cell_dim {
                    return Err(Error::InvalidCell(format!(
                        "face `{f}` of `{name}` records cell dimension {} but `{target}` has {}",
                        f.cell_dim, t.dim
                    )));
                }
                if f.dim() + 1 != e.dim {
                    return Err(Error::InvalidCell(format!(
                        "face `{f}` of `{name}` has dimension {}",
                        f.dim()
                    )));
                }
                validate_deg_word(&f.deg_word, f.cell_dim)?;
            }
        }
        Ok(())
    }

    /// Copies any finite presentation into a table. Table cells keep their
    /// names; other cells become `c<dim>_<k>` in the order of their ids.
    pub fn tabulate<S: SimplicialSet + ?Sized>(s: &S) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::NotFinite);
        }
        let mut names: BTreeMap<CellId, String> = BTreeMap::new();
        let mut by_dim = Vec::new();
        for d in 0..=s.max_cell_dim() {
            let mut cells = s.cells(d, None)?;
            cells.sort();
            for (k, c) in cells.iter().enumerate() {
                let name = match c {
                    CellId::Named(n) => n.clone(),
                    _ => format!("c{d}_{k}"),
                };
                names.insert(c.clone(), name);
            }
            by_dim.push(cells);
        }
        let mut records = Vec::new();
        for (d, cells) in by_dim.into_iter().enumerate() {
            for c in cells {
                let faces = if d == 0 {
                    Vec::new()
                } else {
                    (0..=d)
                        .map(|i| {
                            let f = s.cell_face(&c, i)?;
                            Ok(f.with_cell(CellId::Named(names[&f.cell].clone())))
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                records.push((names[&c].clone(), d, faces));
            }
        }
        FiniteSet::new(records)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.cells.keys().map(String::as_str)
    }

    /// Faces of a cell as stored.
    pub fn faces_of(&self, name: &str) -> Option<&[Simplex]> {
        self.cells.get(name).map(|e| e.faces.as_slice())
    }

    /// Overwrites one face entry without validation; used to build
    /// deliberately broken tables.
    pub fn set_face_unchecked(&mut self, name: &str, i: usize, face: Simplex) {
        if let Some(e) = self.cells.get_mut(name) {
            e.faces[i] = face;
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut records: Vec<(String, usize, Vec<(usize, Simplex)>, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "cell" => {
                    if toks.len() != 4 || toks[2] != "dim" {
                        return Err(Error::parse(line_no, "expected `cell <id> dim <n>`"));
                    }
                    let dim: usize = toks[3]
                        .parse()
                        .map_err(|_| Error::parse(line_no, "bad dimension"))?;
                    if !valid_name(toks[1]) {
                        return Err(Error::parse(line_no, format!("bad cell name `{}`", toks[1])));
                    }
                    records.push((toks[1].to_string(), dim, Vec::new(), line_no));
                }
                "face" => {
                    if !(toks.len() == 4 || toks.len() == 5) || toks[3] != "deg" {
                        return Err(Error::parse(
                            line_no,
                            "expected `face <i> <cell-id> deg <j1,j2,...>`",
                        ));
                    }
                    let i: usize = toks[1]
                        .parse()
                        .map_err(|_| Error::parse(line_no, "bad face index"))?;
                    if !valid_name(toks[2]) {
                        return Err(Error::parse(line_no, format!("bad cell name `{}`", toks[2])));
                    }
                    let word: Vec<usize> = match toks.get(4) {
                        None => Vec::new(),
                        Some(w) => w
                            .split(',')
                            .map(|t| t.parse::<usize>())
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|_| Error::parse(line_no, "bad degeneracy list"))?,
                    };
                    let Some(rec) = records.last_mut() else {
                        return Err(Error::parse(line_no, "face before any cell"));
                    };
                    let face = Simplex {
                        cell: CellId::Named(toks[2].to_string()),
                        cell_dim: 0,
                        deg_word: word,
                    };
                    rec.2.push((i, face));
                }
                other => {
                    return Err(Error::parse(line_no, format!("unknown record `{other}`")));
                }
            }
        }
        let dims: BTreeMap<String, usize> =
            records.iter().map(|r| (r.0.clone(), r.1)).collect();
        let mut out = Vec::new();
        for (name, dim, mut faces, line_no) in records {
            faces.sort_by_key(|f| f.0);
            let expected = if dim == 0 { 0 } else { dim + 1 };
            if faces.len() != expected || faces.iter().enumerate().any(|(k, f)| f.0 != k) {
                return Err(Error::parse(
                    line_no,
                    format!("cell `{name}` of dimension {dim} needs {expected} distinct face lines"),
                ));
            }
            let mut list = Vec::new();
            for (_, mut f) in faces {
                let CellId::Named(t) = &f.cell else { unreachable!() };
                f.cell_dim = *dims
                    .get(t)
                    .ok_or_else(|| Error::parse(line_no, format!("unknown cell `{t}`")))?;
                list.push(f);
            }
            out.push((name, dim, list));
        }
        FiniteSet::new(out)
    }

    /// Text form: a header comment, then cells ordered by dimension and
    /// name.
    pub fn export(&self) -> String {
        let mut order: Vec<(&String, &Entry)> = self.cells.iter().collect();
        order.sort_by(|a, b| a.1.dim.cmp(&b.1.dim).then(a.0.cmp(b.0)));
        let mut s = format!("# simplicial set, {} nondegenerate cells\n", self.cells.len());
        for (name, e) in order {
            let _ = writeln!(s, "cell {name} dim {}", e.dim);
            for (i, f) in e.faces.iter().enumerate() {
                let w: Vec<String> = f.deg_word.iter().map(|j| j.to_string()).collect();
                if w.is_empty() {
                    let _ = writeln!(s, "face {i} {} deg", f.cell);
                } else {
                    let _ = writeln!(s, "face {i} {} deg {}", f.cell, w.join(","));
                }
            }
        }
        s
    }

    fn entry(&self, cell: &CellId) -> Result<&Entry> {
        match cell {
            CellId::Named(n) => self.cells.get(n).ok_or_else(|| Error::UnknownCell(n.clone())),
            other => Err(Error::UnknownCell(other.to_string())),
        }
    }
}

impl SimplicialSet for FiniteSet {
    fn cell_dim(&self, cell: &CellId) -> Result<usize> {
        Ok(self.entry(cell)?.dim)
    }

    fn cell_face(&self, cell: &CellId, i: usize) -> Result<Simplex> {
        let e = self.entry(cell)?;
        e.faces.get(i).cloned().ok_or(Error::IndexOutOfRange {
            op: "face",
            index: i,
            dim: e.dim,
        })
    }

    fn cells(&self, dim: usize, _window: Option<&Window>) -> Result<Vec<CellId>> {
        Ok(self
            .cells
            .iter()
            .filter(|(_, e)| e.dim == dim)
            .map(|(n, _)| CellId::Named(n.clone()))
            .collect())
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn max_cell_dim(&self) -> usize {
        self.cells.values().map(|e| e.dim).max().unwrap_or(0)
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

    const INTERVAL: &str = "\
cell a dim 0
cell b dim 0
cell e dim 1
face 0 b deg
face 1 a deg
";

    #[test]
    fn parses_and_exports_interval() {
        let s = FiniteSet::parse(INTERVAL).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.export(), format!("# simplicial set, 3 nondegenerate cells\n{INTERVAL}"));
        assert_eq!(FiniteSet::parse(&s.export()).unwrap(), s);
    }

    #[test]
    fn parse_errors_cite_lines() {
        let err = FiniteSet::parse("cell a dim 0\nface 0 a deg\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
        let err = FiniteSet::parse("cell a dim 0\nbogus\n").unwrap_err();
        assert_eq!(err, Error::parse(2, "unknown record `bogus`"));
        let err = FiniteSet::parse("face 0 a deg\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = FiniteSet::parse("cell e dim 1\nface 0 z deg\nface 1 z deg\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn rejects_faces_of_wrong_dimension() {
        let text = "cell a dim 0\ncell e dim 1\nface 0 a deg 0\nface 1 a deg\n";
        assert!(FiniteSet::parse(text).is_err());
    }

    #[test]
    fn empty_set_exports_nothing() {
        let s = FiniteSet::parse("# nothing\n").unwrap();
        assert!(s.is_empty());
        assert_eq!(s.export(), "# simplicial set, 0 nondegenerate cells\n");
    }

    #[test]
    fn degenerate_faces_are_allowed() {
        // a 2-simplex with one collapsed edge
        let text = "\
cell v dim 0
cell e dim 1
face 0 v deg
face 1 v deg
cell t dim 2
face 0 v deg 0
face 1 e deg
face 2 e deg
";
        let s = FiniteSet::parse(text).unwrap();
        let t = s.simplex(&CellId::named("t")).unwrap();
        let f = s.face(&t, 0).unwrap();
        assert_eq!(f.to_string(), "v@0");
    }

    #[test]
    fn tabulating_a_product_keeps_its_shape() {
        let s = FiniteSet::parse(INTERVAL).unwrap();
        let p = super::super::Presentation::product(
            super::super::Presentation::Finite(s.clone()),
            super::super::Presentation::Finite(s),
        );
        let t = FiniteSet::tabulate(&p).unwrap();
        assert_eq!(super::super::f_vector(&t).unwrap(), vec![4, 5, 2]);
        assert!(super::super::verify_identities(&t, 3, None, None).unwrap().is_empty());
        assert_eq!(FiniteSet::parse(&t.export()).unwrap(), t);
    }
}
