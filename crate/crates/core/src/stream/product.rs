use super::{canonicalize_point, region_order, Region, StreamPoint};
use crate::error::{Error, Result};
use crate::simplicial::{Presentation, SimplicialSet};

/// Comparison of the order on `|A × B|` with the product of the orders on
/// `|A|` and `|B|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCheck {
    pub samples: usize,
    pub pairs: usize,
    /// `(i, j, on the product, on the factors)` for each disagreement.
    pub discrepancies: Vec<(usize, usize, bool, bool)>,
}

impl ProductCheck {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn window_parts(r: &Region) -> Result<(&[crate::rational::Q], &[crate::rational::Q])> {
    match r {
        Region::Window { lo, hi } => Ok((lo, hi)),
        other => Err(Error::UnsupportedRegion(format!(
            "product check needs coordinate windows, got `{other}`"
        ))),
    }
}

/// Computes the order on the product window directly and on each factor
/// window separately, and reports every sample pair where
/// `p ≤ q` on the product differs from `pr_A p ≤ pr_A q ∧ pr_B p ≤ pr_B q`.
pub fn product_order_check(
    a: &Presentation,
    region_a: &Region,
    b: &Presentation,
    region_b: &Region,
    samples: &[StreamPoint],
) -> Result<ProductCheck> {
    let (alo, ahi) = window_parts(region_a)?;
    let (blo, bhi) = window_parts(region_b)?;
    let ab = Presentation::product(a.clone(), b.clone());
    let region = Region::window(
        alo.iter().chain(blo).cloned().collect(),
        ahi.iter().chain(bhi).cloned().collect(),
    );
    let mut pa = Vec::with_capacity(samples.len());
    let mut pb = Vec::with_capacity(samples.len());
    for p in samples {
        let p = canonicalize_point(&ab, &p.cell, &p.coords)?;
        let (sa, sb) = Presentation::product_components(&p.cell)
            .ok_or_else(|| Error::InvalidCell(format!("`{}` is not a product simplex", p.cell)))?;
        pa.push(canonicalize_point(a, &sa, &p.coords)?);
        pb.push(canonicalize_point(b, &sb, &p.coords)?);
    }
    let whole = region_order(&ab, &region, samples)?;
    let on_a = region_order(a, region_a, &pa)?;
    let on_b = region_order(b, region_b, &pb)?;
    let n = samples.len();
    let mut discrepancies = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = whole.leq(i, j);
            let rhs = on_a.leq(i, j) && on_b.leq(i, j);
            if lhs != rhs {
                discrepancies.push((i, j, lhs, rhs));
            }
        }
    }
    debug_assert!(ab.coord_arity() == alo.len() + blo.len());
    Ok(ProductCheck {
        samples: n,
        pairs: n * n,
        discrepancies,
    })
}
