//! Randomized checks of the structural invariants.

use num_rational::BigRational as Q;
use proptest::prelude::*;

use streamtri::group::{GroupElement, GroupPresentation};
use streamtri::simplicial::{Presentation, SimplicialSet, Simplex, Window, XiCell};
use streamtri::stream::{canonicalize_point, region_order, Region};

fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// A point of `∇[m]` from `m` numerators over a common denominator, with
/// ties and boundary values likely.
fn nabla(m: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(0i64..=6, m).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.into_iter().map(|k| qr(k, 6)).collect()
    })
}

fn simplex_of_xi2() -> impl Strategy<Value = Simplex> {
    let xi = Presentation::xi(2);
    let all: Vec<Simplex> = (0..=3)
        .flat_map(|m| xi.all_simplices(m, Some(&Window::cube(2, 0, 1))).unwrap())
        .collect();
    prop::sample::select(all)
}

/// `δ_i` on `∇[m−1] → ∇[m]`.
fn delta(t: &[Q], i: usize) -> Vec<Q> {
    let m = t.len() + 1;
    let mut out = t.to_vec();
    if i == 0 {
        out.insert(0, qr(1, 1));
    } else if i == m {
        out.push(qr(0, 1));
    } else {
        out.insert(i, t[i - 1].clone());
    }
    out
}

/// `σ_i` on `∇[m+1] → ∇[m]`.
fn sigma(t: &[Q], i: usize) -> Vec<Q> {
    let mut out = t.to_vec();
    out.remove(i);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gluing_along_faces(x in simplex_of_xi2(), seed in any::<u64>(), raw in nabla(4)) {
        let xi = Presentation::xi(2);
        let m = x.dim();
        prop_assume!(m >= 1);
        let i = (seed as usize) % (m + 1);
        let t: Vec<Q> = raw[..m - 1].to_vec();
        let a = canonicalize_point(&xi, &xi.face(&x, i).unwrap(), &t).unwrap();
        let b = canonicalize_point(&xi, &x, &delta(&t, i)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(canonicalize_point(&xi, &a.cell, &a.coords).unwrap(), a);
    }

    #[test]
    fn gluing_along_degeneracies(x in simplex_of_xi2(), seed in any::<u64>(), raw in nabla(5)) {
        let xi = Presentation::xi(2);
        let m = x.dim();
        let i = (seed as usize) % (m + 1);
        let t: Vec<Q> = raw[..m + 1].to_vec();
        let a = canonicalize_point(&xi, &xi.degeneracy(&x, i).unwrap(), &t).unwrap();
        let b = canonicalize_point(&xi, &x, &sigma(&t, i)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn canonical_points_realize_to_the_same_place(x in simplex_of_xi2(), raw in nabla(3)) {
        let xi = Presentation::xi(2);
        let t: Vec<Q> = raw[..x.dim()].to_vec();
        let p = canonicalize_point(&xi, &x, &t).unwrap();
        prop_assert_eq!(xi.realize(&x, &t), xi.realize(&p.cell, &p.coords));
    }

    #[test]
    fn plane_windows_give_the_product_order(
        pts in prop::collection::vec((-5i64..=11, -5i64..=11), 2..7)
    ) {
        let xi = Presentation::xi(2);
        let samples: Vec<_> = pts
            .iter()
            .map(|&(a, b)| {
                let (x, t) = xi.locate(&[qr(a, 4), qr(b, 4)]).unwrap();
                canonicalize_point(&xi, &x, &t).unwrap()
            })
            .collect();
        let region = Region::window(vec![qr(-2, 1), qr(-2, 1)], vec![qr(3, 1), qr(3, 1)]);
        let ord = region_order(&xi, &region, &samples).unwrap();
        prop_assert!(ord.is_preorder());
        prop_assert!(ord.check_witnesses(&xi).unwrap());
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                let expect = pts[i].0 <= pts[j].0 && pts[i].1 <= pts[j].1;
                prop_assert_eq!(ord.leq(i, j), expect);
            }
        }
    }

    #[test]
    fn orbit_representatives_are_invariant(
        word in prop::collection::vec((0usize..2, -3i64..=3), 1..6),
        base in (-4i64..4, -4i64..4),
        shape in 0usize..6,
    ) {
        let k = GroupPresentation::klein();
        let st = k.structure();
        let mut g = GroupElement::identity(2);
        for (which, power) in word {
            g = g.compose(&k.generators[which].1.pow(power)).unwrap();
        }
        let (a, b) = base;
        let chains = [
            vec![vec![a, b]],
            vec![vec![a, b], vec![a + 1, b]],
            vec![vec![a, b], vec![a, b + 1]],
            vec![vec![a, b], vec![a + 1, b + 1]],
            vec![vec![a, b], vec![a + 1, b], vec![a + 1, b + 1]],
            vec![vec![a, b], vec![a, b + 1], vec![a + 1, b + 1]],
        ];
        let x = XiCell::new(chains[shape].clone()).unwrap();
        let gx = g.act(&x).unwrap();
        prop_assert_eq!(st.canonical_orbit_rep(&x).unwrap(), st.canonical_orbit_rep(&gx).unwrap());
        let (rep, h) = st.canonical_cell(&gx).unwrap();
        prop_assert_eq!(h.act(&gx).unwrap(), rep);
        prop_assert!(st.contains(&h) && st.contains(&g));
    }
}
