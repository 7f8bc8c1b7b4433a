//! The realization of `Ξ` is the real line: vertex `(i)` sits at `i` and the
//! edge `(i)(i+1)` at coordinate `t` sits at `i + t`.

use super::StreamPoint;
use crate::error::{Error, Result};
use crate::rational::{floor_i64, Q};
use crate::simplicial::{CellId, Simplex, XiCell};

/// Canonical point of `|Ξ|` over a real number.
pub fn line_point(x: &Q) -> StreamPoint {
    let i = floor_i64(x);
    let frac = x - Q::from_integer(i.into());
    if frac == Q::from_integer(0.into()) {
        return StreamPoint::vertex(CellId::Xi(XiCell::vertex(vec![i])));
    }
    let edge = XiCell::new(vec![vec![i], vec![i + 1]]).expect("unit step");
    StreamPoint {
        cell: Simplex::nondegenerate(CellId::Xi(edge), 1),
        coords: vec![frac],
    }
}

/// The real number under a canonical point of `|Ξ|`.
pub fn line_value(p: &StreamPoint) -> Result<Q> {
    let CellId::Xi(c) = &p.cell.cell else {
        return Err(Error::UnknownCell(p.cell.cell.to_string()));
    };
    if c.arity() != 1 || p.cell.is_degenerate() {
        return Err(Error::InvalidCell(format!("`{}` is not a canonical cell of Ξ", p.cell)));
    }
    let base = Q::from_integer(c.base()[0].into());
    Ok(match p.coords.first() {
        None => base,
        Some(t) => base + t,
    })
}
