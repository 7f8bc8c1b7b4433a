//! End-to-end acceptance run: one line per criterion.
//!
//! Every expected value is recomputed here by a test-side model that shares
//! no code with the library: vertex sequences for normal forms, brute-force
//! orbit enumeration for quotients, the product order on `ℝⁿ` for stream
//! orders.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use streamtri::cone::{factor_conal_isometry, triangulability, RationalCone};
use streamtri::group::{parse_word, quotient, GroupPresentation, Quotient};
use streamtri::simplicial::{
    verify_identities, CellId, Op, Presentation, SimplicialSet, Simplex, Window,
};
use streamtri::stream::{
    canonicalize_point, line_point, line_value, product_order_check, quotient_order_oracle,
    region_order, OracleRegion, Region, StreamPoint,
};
use streamtri::Error;

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

// ---------------------------------------------------------------------------
// vertex-sequence model of Ξⁿ

/// Result of an operator word on a vertex sequence: `d_i` deletes entry
/// `i`, `s_i` repeats it.
fn act_on_sequence(seq: &[Vec<i64>], ops: &[Op]) -> Vec<Vec<i64>> {
    let mut s = seq.to_vec();
    for op in ops {
        match *op {
            Op::Face(i) => {
                s.remove(i);
            }
            Op::Degeneracy(i) => {
                let v = s[i].clone();
                s.insert(i, v);
            }
        }
    }
    s
}

/// Normal form read off a sequence: distinct consecutive points, and the
/// positions of repeats listed from the top.
fn sequence_normal_form(seq: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<usize>) {
    let mut chain: Vec<Vec<i64>> = Vec::new();
    let mut word = Vec::new();
    for (k, p) in seq.iter().enumerate() {
        if chain.last() == Some(p) {
            word.push(k - 1);
        } else {
            chain.push(p.clone());
        }
    }
    word.reverse();
    (chain, word)
}

fn sequence_of(x: &Simplex) -> Vec<Vec<i64>> {
    let CellId::Xi(c) = &x.cell else { panic!("not a chain: {x}") };
    x.surjection().iter().map(|&k| c.vertices()[k].clone()).collect()
}

/// The monotone map `[k] → [m]` of an operator word, as an index list.
fn word_map(m: usize, ops: &[Op]) -> Vec<usize> {
    let id: Vec<Vec<i64>> = (0..=m as i64).map(|i| vec![i]).collect();
    act_on_sequence(&id, ops).into_iter().map(|v| v[0] as usize).collect()
}

fn words(m: usize, len: usize) -> Vec<Vec<Op>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), m as i64)];
    for _ in 0..len {
        let mut next = Vec::new();
        for (w, d) in &frontier {
            for i in 0..=(*d + 1) {
                if *d >= 1 && i <= *d {
                    let mut v: Vec<Op> = w.clone();
                    v.push(Op::Face(i as usize));
                    next.push((v, d - 1));
                }
                if i <= *d {
                    let mut v: Vec<Op> = w.clone();
                    v.push(Op::Degeneracy(i as usize));
                    next.push((v, d + 1));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

// ---------------------------------------------------------------------------
// brute-force orbits of Ξ² under ℤ²⋊Σ₂ subgroups

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Affine {
    perm: Vec<usize>,
    trans: Vec<i64>,
}

impl Affine {
    fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = self.trans.clone();
        for (j, &p) in self.perm.iter().enumerate() {
            out[p] += x[j];
        }
        out
    }

    fn then(&self, g: &Affine) -> Affine {
        // g ∘ self
        let zero = vec![0; self.perm.len()];
        Affine {
            perm: self.perm.iter().map(|&p| g.perm[p]).collect(),
            trans: g.apply(&self.apply(&zero)),
        }
    }

    fn inverse(&self) -> Affine {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        for (j, &p) in self.perm.iter().enumerate() {
            perm[p] = j;
        }
        let trans = (0..n).map(|j| -self.trans[self.perm[j]]).collect();
        Affine { perm, trans }
    }
}

/// Group elements with small translations, by breadth-first closure.
fn small_elements(gens: &[Affine], bound: i64) -> Vec<Affine> {
    let n = gens[0].perm.len();
    let id = Affine {
        perm: (0..n).collect(),
        trans: vec![0; n],
    };
    let mut all: Vec<Affine> = gens.iter().flat_map(|g| [g.clone(), g.inverse()]).collect();
    all.dedup();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for h in &all {
            let k = g.then(h);
            if k.trans.iter().all(|t| t.abs() <= bound) && seen.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    seen.into_iter().collect()
}

/// Chains of Ξ² with base point in `[0,2]²`.
fn cells_in_window() -> Vec<Vec<Vec<i64>>> {
    let steps = [vec![vec![1, 0]], vec![vec![0, 1]], vec![vec![1, 1]], vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            out.push(vec![vec![a, b]]);
            for path in &steps {
                let mut cur = vec![vec![a, b]];
                for s in path {
                    let last = cur.last().unwrap().clone();
                    cur.push(vec![last[0] + s[0], last[1] + s[1]]);
                    out.push(cur.clone());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// f-vector of Ξ²/G by union–find over the window.
fn brute_orbit_f_vector(gens: &[Affine]) -> Vec<usize> {
    let cells = cells_in_window();
    let index: HashMap<Vec<Vec<i64>>, usize> = cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let elements = small_elements(gens, 4);
    for (i, c) in cells.iter().enumerate() {
        for g in &elements {
            let image: Vec<Vec<i64>> = c.iter().map(|v| g.apply(v)).collect();
            if let Some(&j) = index.get(&image) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut f = vec![0; 3];
    let mut roots = BTreeSet::new();
    for i in 0..cells.len() {
        if roots.insert(find(&mut parent, i)) {
            f[cells[i].len() - 1] += 1;
        }
    }
    f
}

fn euler(f: &[usize]) -> i64 {
    f.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

fn torus_gens() -> Vec<Affine> {
    vec![
        Affine { perm: vec![0, 1], trans: vec![1, 0] },
        Affine { perm: vec![0, 1], trans: vec![0, 1] },
    ]
}

fn klein_gens() -> Vec<Affine> {
    vec![
        Affine { perm: vec![1, 0], trans: vec![1, 0] },
        Affine { perm: vec![1, 0], trans: vec![0, 1] },
    ]
}

// ---------------------------------------------------------------------------
// criteria

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_identities() -> Outcome {
    let start = Instant::now();
    let mut checked = Vec::new();
    for n in 1..=3 {
        let xi = Presentation::xi(n);
        let v = verify_identities(&xi, 4, Some(&Window::cube(n, 0, 3)), None).map_err(|e| e.to_string())?;
        ensure!(v.is_empty(), "Ξ^{n}: {} violations, first {}", v.len(), v[0]);
        checked.push(format!("Ξ^{n}"));
    }
    for (name, g) in [("torus", GroupPresentation::translations(2)), ("klein", GroupPresentation::klein())] {
        let qt = quotient(&g).map_err(|e| e.to_string())?;
        let v = verify_identities(&qt, 4, None, None).map_err(|e| e.to_string())?;
        ensure!(v.is_empty(), "{name}: {} violations", v.len());
        checked.push(name.to_string());
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(10), "took {t:?}");
    Ok(format!("0 violations on {} up to dim 4 in {:.2?}", checked.join(", "), t))
}

fn criterion_normal_forms() -> Outcome {
    let xi2 = Presentation::xi(2);
    let w = Window::cube(2, 0, 2);
    let mut simplices = 0;
    let mut compared = 0usize;
    let mut mismatches = 0usize;
    for m in 0..=4 {
        let ws = words(m, 3);
        let maps: Vec<Vec<usize>> = ws.iter().map(|w| word_map(m, w)).collect();
        for x in xi2.all_simplices(m, Some(&w)).map_err(|e| e.to_string())? {
            simplices += 1;
            let seq = sequence_of(&x);
            let mut by_map: BTreeMap<&Vec<usize>, Simplex> = BTreeMap::new();
            for (word, map) in ws.iter().zip(&maps) {
                let mut y = x.clone();
                for &op in word {
                    y = xi2.apply(&y, op).map_err(|e| e.to_string())?;
                }
                let (chain, deg) = sequence_normal_form(&act_on_sequence(&seq, word));
                let CellId::Xi(c) = &y.cell else { return Err("left Ξ²".into()) };
                compared += 1;
                if c.vertices() != chain.as_slice() || y.deg_word != deg {
                    mismatches += 1;
                }
                match by_map.get(map) {
                    Some(prev) if *prev != y => mismatches += 1,
                    Some(_) => {}
                    None => {
                        by_map.insert(map, y);
                    }
                }
            }
        }
    }
    ensure!(mismatches == 0, "{mismatches} mismatches");
    Ok(format!("{simplices} simplices × words of length ≤ 3: {compared} evaluations, 0 mismatches"))
}

fn criterion_product() -> Outcome {
    let line = Presentation::xi(1);
    let sq = Presentation::product(line.clone(), line.clone());
    let w = Region::window(vec![qi(-1)], vec![qi(2)]);
    let mut samples = Vec::new();
    let grid = [q(-1, 2), qi(0), q(1, 2), qi(1), q(3, 2)];
    for a in &grid {
        for b in &grid {
            let (x, t) = sq.locate(&[a.clone(), b.clone()]).map_err(|e| e.to_string())?;
            samples.push(canonicalize_point(&sq, &x, &t).map_err(|e| e.to_string())?);
        }
    }
    let cells = sq.cells(2, Some(&Window::cube(2, -1, 2))).map_err(|e| e.to_string())?;
    let mut triangles = 0;
    for c in cells {
        let b = StreamPoint::barycenter(c, 2);
        let p = sq.realize(&b.cell, &b.coords).ok_or("no coordinates")?;
        if p.iter().all(|x| *x > qi(-1) && *x < qi(2)) {
            samples.push(b);
            triangles += 1;
        }
    }
    ensure!(triangles == 18, "expected 18 triangle barycenters, found {triangles}");
    let report = product_order_check(&line, &w, &line, &w, &samples).map_err(|e| e.to_string())?;
    ensure!(report.is_clean(), "{} discrepancies", report.discrepancies.len());
    // and against the order of ℝ² directly
    let ord = region_order(&sq, &Region::window(vec![qi(-1), qi(-1)], vec![qi(2), qi(2)]), &samples)
        .map_err(|e| e.to_string())?;
    let pts: Vec<Vec<Q>> = samples.iter().map(|s| sq.realize(&s.cell, &s.coords).unwrap()).collect();
    for i in 0..samples.len() {
        for j in 0..samples.len() {
            let expect = pts[i][0] <= pts[j][0] && pts[i][1] <= pts[j][1];
            ensure!(ord.leq(i, j) == expect, "{} vs {}", samples[i], samples[j]);
        }
    }
    Ok(format!(
        "{} samples (25 grid + {triangles} barycenters), {} pairs, 0 discrepancies; matches ℝ² order",
        samples.len(),
        report.pairs
    ))
}

fn check_quotient(name: &str, g: &GroupPresentation, gens: &[Affine]) -> Result<Quotient, String> {
    let qt = quotient(g).map_err(|e| e.to_string())?;
    let brute = brute_orbit_f_vector(gens);
    ensure!(qt.f_vector() == brute, "{name}: library {:?} vs orbit oracle {:?}", qt.f_vector(), brute);
    ensure!(qt.euler_characteristic() == euler(&brute), "{name}: χ mismatch");
    ensure!(euler(&brute) == 0, "{name}: oracle χ = {}", euler(&brute));
    Ok(qt)
}

fn criterion_torus() -> Outcome {
    let qt = check_quotient("torus", &GroupPresentation::translations(2), &torus_gens())?;
    ensure!(qt.f_vector() == vec![1, 3, 2], "f = {:?}", qt.f_vector());
    Ok("f_vector (1,3,2), χ = 0, equal to the 3×3 orbit enumeration".into())
}

fn criterion_klein() -> Outcome {
    let k = GroupPresentation::klein();
    ensure!(k.verify_relation(&parse_word("a^2 b^-2").unwrap()).unwrap(), "a²b⁻² ≠ 1");
    let hnf = k.structure().lattice().basis().to_vec();
    ensure!(hnf == vec![vec![1, 1], vec![0, 2]], "HNF {hnf:?}");
    let qt = check_quotient("klein", &k, &klein_gens())?;
    ensure!(qt.stabilized_cells().is_empty(), "stabilized cells present");
    let f: Vec<String> = qt.f_vector().iter().map(|c| c.to_string()).collect();
    Ok(format!("a²b⁻² = 1, HNF ((1,1),(0,2)), f_vector ({}), χ = 0, equal to the orbit enumeration", f.join(",")))
}

fn criterion_triangulability() -> Outcome {
    let start = Instant::now();
    let orthant = triangulability(&RationalCone::positive_orthant(2), None).map_err(|e| e.to_string())?;
    ensure!(orthant.triangulable, "orthant rejected");
    let oct = triangulability(&RationalCone::light_cone_octagon(), None).map_err(|e| e.to_string())?;
    ensure!(!oct.triangulable && !oct.report.free && oct.report.generating, "octagon: {:?}", oct.report);
    ensure!(oct.report.extremal_rays.len() == 8, "octagon extremal rays {}", oct.report.extremal_rays.len());
    let diag = RationalCone::from_integers(2, &[&[1, 1]]).map_err(|e| e.to_string())?;
    let d = triangulability(&diag, None).map_err(|e| e.to_string())?;
    ensure!(!d.triangulable && !d.report.generating, "diagonal ray: {:?}", d.report);
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(1), "took {t:?}");
    Ok(format!("orthant yes; octagon no (free=false); ray (1,1) no (generating=false); {t:.2?}"))
}

fn criterion_line() -> Outcome {
    let line = Presentation::xi(1);
    let region = Region::window(vec![qi(-5)], vec![qi(5)]);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let draw = |rng: &mut StdRng| {
        let d = rng.gen_range(1..=12);
        let n = rng.gen_range(-5 * d + 1..5 * d);
        q(n, d)
    };
    let mut disagreements = 0;
    let mut equal = 0;
    for _ in 0..1000 {
        let (x, y) = (draw(&mut rng), draw(&mut rng));
        let (px, py) = (line_point(&x), line_point(&y));
        ensure!(line_value(&px).unwrap() == x, "line map does not invert at {x}");
        let ord = region_order(&line, &region, &[px, py]).map_err(|e| e.to_string())?;
        if ord.leq(0, 1) != (x <= y) || ord.leq(1, 0) != (y <= x) {
            disagreements += 1;
        }
        equal += usize::from(x == y);
    }
    ensure!(disagreements == 0, "{disagreements} disagreements");
    Ok(format!("1000 random pairs in (-5,5) ({equal} ties), 0 disagreements"))
}

/// Whether some lift of `y` by a small group element dominates `x`.
fn brute_lift(gens: &[Affine], x: &[Q], y: &[Q]) -> bool {
    small_elements(gens, 3).iter().any(|g| {
        let mut gy = vec![qi(0); y.len()];
        for (j, &p) in g.perm.iter().enumerate() {
            gy[p] = y[j].clone() + qi(g.trans[p]);
        }
        x.iter().zip(&gy).all(|(a, b)| a <= b)
    })
}

fn criterion_oracle() -> Outcome {
    let mut parts = Vec::new();
    for (name, g, gens) in [
        ("torus", GroupPresentation::translations(2), torus_gens()),
        ("klein", GroupPresentation::klein(), klein_gens()),
    ] {
        let qt = quotient(&g).map_err(|e| e.to_string())?;
        let mut samples: Vec<StreamPoint> = qt.cells(0, None).unwrap().into_iter().map(StreamPoint::vertex).collect();
        for c in qt.cells(2, None).unwrap() {
            samples.push(StreamPoint::barycenter(c, 2));
        }
        let required = samples.len();
        // beyond the required set: edge barycenters and random interior points
        for c in qt.cells(1, None).unwrap() {
            samples.push(StreamPoint::barycenter(c, 1));
        }
        let mut rng = StdRng::seed_from_u64(8);
        for c in qt.cells(2, None).unwrap() {
            for _ in 0..4 {
                let a = rng.gen_range(2..30);
                let b = rng.gen_range(1..a);
                let cell = qt.simplex(&c).unwrap();
                samples.push(canonicalize_point(&qt, &cell, &[q(a, 31), q(b, 31)]).unwrap());
            }
        }
        let ord = region_order(&qt, &Region::Whole, &samples).map_err(|e| e.to_string())?;
        ensure!(ord.check_witnesses(&qt).unwrap(), "{name}: witness replay failed");
        let pts: Vec<Vec<Q>> = samples.iter().map(|s| qt.realize_rep(&s.cell, &s.coords).unwrap()).collect();
        for i in 0..samples.len() {
            for j in 0..samples.len() {
                let o = quotient_order_oracle(qt.structure(), &pts[i], &pts[j], &OracleRegion::Whole)
                    .map_err(|e| e.to_string())?;
                ensure!(o.related == ord.leq(i, j), "{name}: {} vs {}", samples[i], samples[j]);
                ensure!(brute_lift(&gens, &pts[i], &pts[j]), "{name}: no small lift for {i},{j}");
            }
        }
        ensure!(ord.is_total(), "{name}: region order not total");
        parts.push(format!("{name} {required}+{} samples", samples.len() - required));
    }
    Ok(format!("{}: all pairs agree, both total", parts.join(", ")))
}

fn criterion_isometries() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut count = 0;
    for n in [2usize, 3] {
        let mut perms = vec![vec![]];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=k).map(move |pos| {
                        let mut v = p.clone();
                        v.insert(pos, k);
                        v
                    })
                })
                .collect();
        }
        for p in perms {
            let mut a = vec![vec![qi(0); n]; n];
            for (j, &r) in p.iter().enumerate() {
                a[r][j] = qi(1);
            }
            let t: Vec<Q> = (0..n).map(|_| qi(rng.gen_range(-9..=9))).collect();
            let f = factor_conal_isometry(&a, &t).map_err(|e| e.to_string())?;
            ensure!(f.matrix() == a && f.trans == t, "factor of {p:?} does not recompose");
            for _ in 0..5 {
                let x: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-20..=20), rng.gen_range(1..=7))).collect();
                let ax: Vec<Q> = (0..n)
                    .map(|r| (0..n).map(|c| &a[r][c] * &x[c]).sum::<Q>() + &t[r])
                    .collect();
                ensure!(f.apply(&x) == ax, "affine action differs for {p:?}");
                let g = f.to_group_element().ok_or("integral translation lost")?;
                ensure!(g.apply(&x) == ax, "group element differs for {p:?}");
            }
            count += 1;
        }
    }
    ensure!(count == 8, "{count} permutations");
    let rot = vec![vec![qi(0), qi(-1)], vec![qi(1), qi(0)]];
    match factor_conal_isometry(&rot, &[qi(0), qi(0)]) {
        Err(Error::NotConePreserving { .. }) => {}
        other => return Err(format!("rotation: {other:?}")),
    }
    Ok("2 + 6 permutations recompose exactly; 90° rotation rejected (not cone-preserving)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("simplicial identity suite", criterion_identities),
        ("Eilenberg–Zilber uniqueness", criterion_normal_forms),
        ("product realization", criterion_product),
        ("torus reproduction", criterion_torus),
        ("Klein bottle reproduction", criterion_klein),
        ("triangulability decision", criterion_triangulability),
        ("line triangulation", criterion_line),
        ("quotient order oracle agreement", criterion_oracle),
        ("isometry factorization", criterion_isometries),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match r {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} [{t:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why} [{t:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
