//! The realization of Ξ is the real line, order included.
//!
//! cargo run --example line

use streamtri::rational::{fmt_q, q, qi};
use streamtri::simplicial::Presentation;
use streamtri::stream::{line_point, line_value, region_order, Region};

fn main() -> streamtri::Result<()> {
    let values = [q(-7, 3), qi(-1), q(1, 4), q(7, 2), qi(3)];
    for v in &values {
        let p = line_point(v);
        println!("{:>5} ↦ {p} ↦ {}", fmt_q(v), fmt_q(&line_value(&p)?));
    }
    let line = Presentation::xi(1);
    let samples: Vec<_> = values.iter().map(line_point).collect();
    let ord = region_order(&line, &Region::window(vec![qi(-5)], vec![qi(5)]), &samples)?;
    for i in 0..values.len() {
        for j in 0..values.len() {
            assert_eq!(ord.leq(i, j), values[i] <= values[j]);
        }
    }
    println!("the window order on these samples is the order of ℝ");
    Ok(())
}
