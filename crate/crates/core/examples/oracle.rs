//! The geometric oracle on ℝⁿ/G against the combinatorial region order.
//!
//! cargo run --example oracle

use streamtri::cli::{compare_with_oracle, default_quotient_samples};
use streamtri::group::{quotient, GroupPresentation};
use streamtri::rational::{fmt_vec, q, qi};
use streamtri::stream::{quotient_order_oracle, OracleRegion};

fn main() -> streamtri::Result<()> {
    let torus = GroupPresentation::translations(2).structure();
    let x = [q(1, 10), q(9, 10)];
    let y = [q(2, 10), q(1, 10)];
    let a = quotient_order_oracle(&torus, &x, &y, &OracleRegion::Whole)?;
    let lift = a.lift.expect("whole-space answers carry a lift");
    println!("torus: [{}] ≤ [{}] via the lift {lift} ↦ {}", fmt_vec(&x), fmt_vec(&y), fmt_vec(&lift.apply(&y)));

    let unit = OracleRegion::Window { lo: vec![qi(0), qi(0)], hi: vec![qi(1), qi(1)] };
    let z = [q(1, 8), q(3, 4)];
    let w = [q(1, 4), q(1, 4)];
    println!("inside (0,1)²: {} ≤ {} is {}", fmt_vec(&w), fmt_vec(&z), quotient_order_oracle(&torus, &w, &z, &unit)?.related);

    for (name, g) in [("torus", GroupPresentation::translations(2)), ("Klein bottle", GroupPresentation::klein())] {
        let qt = quotient(&g)?;
        let samples = default_quotient_samples(&qt)?;
        let cmp = compare_with_oracle(&qt, &samples)?;
        println!(
            "{name}: {} pairs, region order total={}, oracle total={}, disagreements={}",
            cmp.pairs,
            cmp.region_total,
            cmp.oracle_total,
            cmp.disagreements.len()
        );
    }
    Ok(())
}
