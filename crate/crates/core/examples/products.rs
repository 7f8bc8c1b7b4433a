//! Products of simplicial sets: Δ[1]×Δ[1], and Ξ×Ξ against Ξ².
//!
//! cargo run --example products

use streamtri::simplicial::{f_vector, FiniteSet, Presentation, SimplicialSet, Window};

const INTERVAL: &str = "cell a dim 0\ncell b dim 0\ncell e dim 1\nface 0 b deg\nface 1 a deg\n";

fn main() -> streamtri::Result<()> {
    let interval = Presentation::Finite(FiniteSet::parse(INTERVAL)?);
    let square = Presentation::product(interval.clone(), interval);
    println!("Δ[1]×Δ[1]: f-vector {:?}", f_vector(&square)?);
    for c in square.cells(2, None)? {
        println!("  triangle {c}");
    }
    let cube = Presentation::product(square.clone(), Presentation::Finite(FiniteSet::parse(INTERVAL)?));
    println!("Δ[1]³: f-vector {:?}", f_vector(&cube)?);

    let line = Presentation::xi(1);
    let plane = Presentation::product(line.clone(), line);
    let w = Window::cube(2, 0, 3);
    let xi2 = Presentation::xi(2);
    for d in 0..=2 {
        println!(
            "dimension {d}: Ξ×Ξ has {} cells on [0,3]², Ξ² has {}",
            plane.cells(d, Some(&w))?.len(),
            xi2.cells(d, Some(&w))?.len()
        );
    }
    let table = FiniteSet::tabulate(&square)?;
    print!("table form of Δ[1]×Δ[1]:\n{}", table.export());
    Ok(())
}
