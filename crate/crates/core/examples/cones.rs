//! Cone predicates and the triangulability verdict.
//!
//! cargo run --example cones

use streamtri::cone::{format_ray, triangulability, RationalCone};
use streamtri::group::GroupPresentation;

fn main() -> streamtri::Result<()> {
    let cases = [
        ("(ℝ²)⁺", RationalCone::positive_orthant(2), Some(GroupPresentation::translations(2))),
        ("(ℝ²)⁺ over the Klein bottle", RationalCone::positive_orthant(2), Some(GroupPresentation::klein())),
        ("eight-ray light cone", RationalCone::light_cone_octagon(), None),
        ("the ray (1,1)", RationalCone::from_integers(2, &[&[1, 1]])?, None),
        ("a redundant cone", RationalCone::from_integers(2, &[&[1, 0], &[1, 1], &[0, 1]])?, None),
    ];
    for (name, cone, group) in cases {
        let v = triangulability(&cone, group.as_ref())?;
        let rays: Vec<String> = v.report.extremal_rays.iter().map(|r| format_ray(r)).collect();
        println!("{name}");
        println!("  extremal rays {}", rays.join(" "));
        println!("  generating={} free={} triangulable={}", v.report.generating, v.report.free, v.triangulable);
        if let Some(q) = v.witness {
            println!("  triangulated by a quotient with f-vector {:?}", q.f_vector());
        }
    }
    Ok(())
}
