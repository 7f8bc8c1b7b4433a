use std::fmt;

use super::{SimplicialSet, Simplex, Window};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityFamily {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`.
    FaceFace,
    /// `s_i s_{j-1} = s_j s_i` for `i < j`.
    DegeneracyDegeneracy,
    /// `d_i s_j = s_{j-1} d_i` for `i < j`.
    FaceBelowDegeneracy,
    /// `d_i s_j = s_j d_{i-1}` for `i > j + 1`.
    FaceAboveDegeneracy,
    /// `d_j s_j = d_{j+1} s_j = id`.
    FaceCancelsDegeneracy,
}

impl fmt::Display for IdentityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentityFamily::FaceFace => "d_i d_j = d_(j-1) d_i",
            IdentityFamily::DegeneracyDegeneracy => "s_i s_(j-1) = s_j s_i",
            IdentityFamily::FaceBelowDegeneracy => "d_i s_j = s_(j-1) d_i",
            IdentityFamily::FaceAboveDegeneracy => "d_i s_j = s_j d_(i-1)",
            IdentityFamily::FaceCancelsDegeneracy => "d_j s_j = d_(j+1) s_j = id",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub family: IdentityFamily,
    pub simplex: Simplex,
    pub i: usize,
    pub j: usize,
    pub lhs: Simplex,
    pub rhs: Simplex,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] on {} with i={} j={}: {} != {}",
            self.family, self.simplex, self.i, self.j, self.lhs, self.rhs
        )
    }
}

/// Checks all five identity families on every simplex of dimension at most
/// `max_dim` (degenerate ones included). `budget` caps the number of
/// simplices examined; `None` examines all of them.
pub fn verify_identities<S: SimplicialSet + ?Sized>(
    s: &S,
    max_dim: usize,
    window: Option<&Window>,
    budget: Option<usize>,
) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let mut seen = 0usize;
    for m in 0..=max_dim {
        for x in s.all_simplices(m, window)? {
            if budget.is_some_and(|b| seen >= b) {
                return Ok(out);
            }
            seen += 1;
            check_simplex(s, &x, &mut out)?;
        }
    }
    Ok(out)
}

fn check_simplex<S: SimplicialSet + ?Sized>(
    s: &S,
    x: &Simplex,
    out: &mut Vec<Violation>,
) -> Result<()> {
    let m = x.dim();
    let mut report = |family, i, j, lhs: Simplex, rhs: Simplex| {
        if lhs != rhs {
            out.push(Violation {
                family,
                simplex: x.clone(),
                i,
                j,
                lhs,
                rhs,
            });
        }
    };
    if m >= 2 {
        for j in 1..=m {
            let dj = s.face(x, j)?;
            for i in 0..j {
                let lhs = s.face(&dj, i)?;
                let rhs = s.face(&s.face(x, i)?, j - 1)?;
                report(IdentityFamily::FaceFace, i, j, lhs, rhs);
            }
        }
    }
    for j in 1..=m + 1 {
        for i in 0..j {
            let lhs = s.degeneracy(&s.degeneracy(x, j - 1)?, i)?;
            let rhs = s.degeneracy(&s.degeneracy(x, i)?, j)?;
            report(IdentityFamily::DegeneracyDegeneracy, i, j, lhs, rhs);
        }
    }
    for j in 0..=m {
        let sj = s.degeneracy(x, j)?;
        for i in 0..=m + 1 {
            if i < j {
                let lhs = s.face(&sj, i)?;
                let rhs = s.degeneracy(&s.face(x, i)?, j - 1)?;
                report(IdentityFamily::FaceBelowDegeneracy, i, j, lhs, rhs);
            } else if i > j + 1 {
                let lhs = s.face(&sj, i)?;
                let rhs = s.degeneracy(&s.face(x, i - 1)?, j)?;
                report(IdentityFamily::FaceAboveDegeneracy, i, j, lhs, rhs);
            } else {
                let lhs = s.face(&sj, i)?;
                report(IdentityFamily::FaceCancelsDegeneracy, i, j, lhs, x.clone());
            }
        }
    }
    Ok(())
}
