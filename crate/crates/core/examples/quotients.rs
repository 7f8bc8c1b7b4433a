//! Crystallographic quotients Ξⁿ/G: torus, Klein bottle, 3-torus, and a
//! group with fixed points.
//!
//! cargo run --example quotients

use streamtri::group::{parse_word, quotient, GroupElement, GroupPresentation};

fn describe(name: &str, g: &GroupPresentation) -> streamtri::Result<()> {
    let st = g.structure();
    println!("{name}: point group of order {}, translation lattice {:?}", st.point_group_order(), st.lattice().basis());
    let fp = st.fixed_points();
    match &fp.witness {
        None => println!("  acts freely"),
        Some((e, p)) => println!("  {e} fixes {p:?}"),
    }
    match quotient(g) {
        Ok(q) => {
            println!("  f-vector {:?}, Euler characteristic {}", q.f_vector(), q.euler_characteristic());
            for (cell, rep) in q.representatives() {
                println!("    {cell} ← {rep}");
            }
        }
        Err(e) => println!("  no quotient: {e}"),
    }
    Ok(())
}

fn main() -> streamtri::Result<()> {
    let klein = GroupPresentation::klein();
    println!("a²b⁻² = 1 in the Klein group: {}", klein.verify_relation(&parse_word("a^2 b^-2")?)?);
    describe("torus", &GroupPresentation::translations(2))?;
    describe("Klein bottle", &klein)?;
    describe("3-torus", &GroupPresentation::translations(3))?;
    let swap = GroupPresentation::new(
        2,
        vec![
            ("s".into(), GroupElement::permutation(vec![1, 0])?),
            ("e".into(), GroupElement::translation(vec![1, 0])),
        ],
    )?;
    describe("swap with translations", &swap)?;
    let glide = GroupPresentation::new(2, vec![("a".into(), klein.generator("a")?.clone())])?;
    describe("one glide only", &glide)?;
    Ok(())
}
