use std::fmt;

use super::{validate_deg_word, Simplex, XiCell};
use crate::error::{Error, Result};

/// Identifier of a nondegenerate cell.
///
/// Text forms: a bare name for table cells, `x(0,0)(1,0)` for a chain in
/// `Ξⁿ`, `p{a;b}` for a product cell built from two simplices, and `u3:c`
/// for cell `c` of the fourth summand of a disjoint union.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellId {
    Named(String),
    Xi(XiCell),
    Pair(Box<Simplex>, Box<Simplex>),
    Tagged(usize, Box<CellId>),
}

impl CellId {
    pub fn named(s: impl Into<String>) -> Self {
        CellId::Named(s.into())
    }

    pub fn pair(a: Simplex, b: Simplex) -> Self {
        CellId::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellId::Named(s) => write!(f, "{s}"),
            CellId::Xi(c) => write!(f, "{c}"),
            CellId::Pair(a, b) => write!(f, "p{{{a};{b}}}"),
            CellId::Tagged(k, c) => write!(f, "u{k}:{c}"),
        }
    }
}

pub(crate) fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

/// Parses the text form of a cell identifier.
pub fn parse_cell(s: &str) -> Result<CellId> {
    let bad = |why: &str| Error::parse(0, format!("bad cell id `{s}`: {why}"));
    if let Some(rest) = s.strip_prefix("x(") {
        let body = rest.strip_suffix(')').ok_or_else(|| bad("unterminated chain"))?;
        let mut vertices = Vec::new();
        for group in body.split(")(") {
            let v: std::result::Result<Vec<i64>, _> =
                group.split(',').map(|t| t.trim().parse::<i64>()).collect();
            vertices.push(v.map_err(|_| bad("non-integer coordinate"))?);
        }
        return XiCell::new(vertices).map(CellId::Xi);
    }
    if let Some(rest) = s.strip_prefix("p{") {
        let body = rest.strip_suffix('}').ok_or_else(|| bad("unterminated pair"))?;
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in body.char_indices() {
            match ch {
                '{' => depth += 1,
                '}' => depth -= 1,
                ';' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(|| bad("pair needs two components"))?;
        let a = parse_simplex(&body[..i])?;
        let b = parse_simplex(&body[i + 1..])?;
        return Ok(CellId::pair(a, b));
    }
    if let Some(rest) = s.strip_prefix('u') {
        if let Some((k, inner)) = rest.split_once(':') {
            if let Ok(k) = k.parse::<usize>() {
                return Ok(CellId::Tagged(k, Box::new(parse_cell(inner)?)));
            }
        }
    }
    if valid_name(s) {
        Ok(CellId::Named(s.to_string()))
    } else {
        Err(bad("not a valid name"))
    }
}

/// Parses `cell` or `cell@j1,j2,…`. The cell dimension is recovered from
/// the identifier when it is self-describing (chains and pairs) and is
/// otherwise left at zero for the caller to fill in.
pub fn parse_simplex(s: &str) -> Result<Simplex> {
    let mut depth = 0i32;
    let mut at = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            '@' if depth == 0 => at = Some(i),
            _ => {}
        }
    }
    let (cell_s, word) = match at {
        Some(i) => {
            let w: std::result::Result<Vec<usize>, _> =
                s[i + 1..].split(',').map(|t| t.trim().parse::<usize>()).collect();
            let w = w.map_err(|_| Error::parse(0, format!("bad degeneracy word in `{s}`")))?;
            (&s[..i], w)
        }
        None => (s, Vec::new()),
    };
    let cell = parse_cell(cell_s)?;
    let cell_dim = intrinsic_dim(&cell).unwrap_or(0);
    if intrinsic_dim(&cell).is_some() {
        validate_deg_word(&word, cell_dim)?;
    }
    Ok(Simplex {
        cell,
        cell_dim,
        deg_word: word,
    })
}

fn intrinsic_dim(c: &CellId) -> Option<usize> {
    match c {
        CellId::Named(_) => None,
        CellId::Xi(x) => Some(x.dim()),
        CellId::Pair(a, _) => Some(a.dim()),
        CellId::Tagged(_, inner) => intrinsic_dim(inner),
    }
}
