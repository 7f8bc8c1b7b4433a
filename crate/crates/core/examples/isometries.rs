//! Conal isometries of (ℝⁿ, (ℝⁿ)⁺) factor as a permutation followed by a
//! translation.
//!
//! cargo run --example isometries

use streamtri::cone::{factor_conal_isometry, format_qvec};
use streamtri::rational::{q, qi};
use streamtri::Q;

fn matrix(rows: &[&[i64]]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
}

fn main() {
    let cases = [
        ("3-cycle", matrix(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]), vec![qi(2), qi(-1), q(1, 2)]),
        ("swap", matrix(&[&[0, 1], &[1, 0]]), vec![qi(1), qi(0)]),
        ("90° rotation", matrix(&[&[0, -1], &[1, 0]]), vec![qi(0), qi(0)]),
        ("shear", matrix(&[&[1, 1], &[0, 1]]), vec![qi(0), qi(0)]),
    ];
    for (name, a, t) in cases {
        match factor_conal_isometry(&a, &t) {
            Ok(f) => {
                println!("{name}: permutation {:?} then translation {}", f.perm, format_qvec(&f.trans));
                if let Some(g) = f.to_group_element() {
                    println!("  as an element of ℤⁿ⋊Σₙ: {g}");
                }
            }
            Err(e) => println!("{name}: rejected ({e})"),
        }
    }
}
