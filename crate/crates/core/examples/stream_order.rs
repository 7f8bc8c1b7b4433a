//! Causal preorders on realizations: a window of the plane, a vertex star,
//! and the whole torus.
//!
//! cargo run --example stream_order

use streamtri::cone::format_qvec;
use streamtri::group::{quotient, GroupPresentation};
use streamtri::rational::{q, qi};
use streamtri::simplicial::{parse_cell, Presentation, SimplicialSet};
use streamtri::stream::{canonicalize_point, region_order, Region, StreamPoint};

fn main() -> streamtri::Result<()> {
    let xi2 = Presentation::xi(2);
    let pts = [[q(1, 4), q(1, 2)], [q(3, 4), q(5, 4)], [q(3, 2), q(1, 3)], [q(7, 4), q(7, 4)]];
    let mut samples = Vec::new();
    for p in &pts {
        let (x, t) = xi2.locate(p)?;
        samples.push(canonicalize_point(&xi2, &x, &t)?);
    }
    let region = Region::window(vec![qi(0), qi(0)], vec![qi(2), qi(2)]);
    let ord = region_order(&xi2, &region, &samples)?;
    println!("{region}:");
    for (i, s) in samples.iter().enumerate() {
        let row: String = (0..samples.len()).map(|j| if ord.leq(i, j) { '≤' } else { '·' }).collect();
        println!("  {row}  {s}");
    }
    if let Some(chain) = ord.witness(0, 3) {
        println!("  witness for sample 0 ≤ sample 3:");
        for step in chain {
            println!("    in {}: {} ≤ {}", step.cell, format_qvec(&step.from), format_qvec(&step.to));
        }
    }

    // the open star of the origin
    let star = Region::Star(parse_cell("x(0,0)")?);
    let mut around = vec![StreamPoint::vertex(parse_cell("x(0,0)")?)];
    for c in ["x(0,0)(1,0)(1,1)", "x(-1,-1)(0,-1)(0,0)", "x(-1,0)(0,0)(0,1)"] {
        let cell = parse_cell(c)?;
        let d = xi2.cell_dim(&cell)?;
        around.push(StreamPoint::barycenter(cell, d));
    }
    let ord = region_order(&xi2, &star, &around)?;
    println!("{star}: total={} related pairs={}", ord.is_total(), count(&ord));

    // on the compact torus every point can reach every other
    let torus = quotient(&GroupPresentation::translations(2))?;
    let mut ts = Vec::new();
    for d in 0..=2 {
        for c in torus.cells(d, None)? {
            ts.push(StreamPoint::barycenter(c, d));
        }
    }
    let ord = region_order(&torus, &Region::Whole, &ts)?;
    println!("whole torus on {} barycenters: total={}", ts.len(), ord.is_total());
    Ok(())
}

fn count(ord: &streamtri::stream::RegionOrder) -> usize {
    (0..ord.len()).map(|i| (0..ord.len()).filter(|&j| ord.leq(i, j)).count()).sum()
}
