//! Face/degeneracy evaluation on `Ξ²` and the identity checker.
//!
//! cargo run --example identities

use streamtri::simplicial::{parse_cell, verify_identities, Op, Presentation, SimplicialSet, Window};

fn main() -> streamtri::Result<()> {
    let xi2 = Presentation::xi(2);
    let square = xi2.simplex(&parse_cell("x(0,0)(1,0)(1,1)")?)?;
    println!("x = {square}");
    for i in 0..=2 {
        println!("  d{i} x = {}", xi2.face(&square, i)?);
    }
    // two words with the same action land on the same normal form
    let w1: Vec<Op> = ["s1", "d2"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let w2: Vec<Op> = ["s1", "d1"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let cell = square.cell.clone();
    println!("  d2 s1 x = {}", xi2.normal_form(&cell, &w1)?);
    println!("  d1 s1 x = {}", xi2.normal_form(&cell, &w2)?);
    let degenerate = xi2.normal_form(&cell, &["s0".parse()?, "s2".parse()?])?;
    println!("  s2 s0 x = {degenerate}");

    for n in 1..=3 {
        let v = verify_identities(&Presentation::xi(n), 4, Some(&Window::cube(n, 0, 2)), None)?;
        println!("Ξ^{n} on [0,2]^{n} up to dimension 4: {} violations", v.len());
    }
    Ok(())
}
