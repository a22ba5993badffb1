//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runtime limits are wall-clock on the build profile under test. Criteria
//! listed in `KNOWN_FAILURES` are printed as FAIL with the reason; the
//! process only exits non-zero when some other criterion fails, or when a
//! known failure unexpectedly starts to pass (so the list cannot go stale).

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fancert_core::additive::{
    additive_act, additive_act_x, build_family_fan, character_relations, check_equivariance, component_star_check,
    ga_orbit_report, orbit_dimension, orbit_dimension_at, FamilyFan,
};
use fancert_core::cox::{group_act, orbit_label, points_equal, quasitorus, quotient_map, GroupElement};
use fancert_core::fan::standard::{product, projective_space};
use fancert_core::fan::{dual_fan_of_polytope, primitive_collections, star_fan, verify_isomorphism};
use fancert_core::linalg::{det, rat, same_row_lattice, Rat};
use fancert_core::lp::fm::fm_feasible;
use fancert_core::lp::{feasible, verify_farkas, Feasibility, LinearSystem};
use fancert_core::projectivity::{is_projective, verify_cyclic_certificate, ProjectivityVerdict};
use fancert_core::{ConeRef, Fan, FanError, IntMat, IntVec, Polytope, RatVec};
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_N3: Duration = Duration::from_secs(1);
const LIMIT_N4: Duration = Duration::from_secs(5);
const LIMIT_N5: Duration = Duration::from_secs(30);
const LIMIT_SUITE: Duration = Duration::from_secs(120);

/// Criteria that cannot hold as specified; see the project notes. The
/// second field is printed next to FAIL.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (1, "the cyclic subdivision rule does not give a fan for n >= 4"),
    (
        2,
        "for n >= 4 the cones are not a complete fan, so projectivity is undefined",
    ),
];

type Suite = fn(&mut ChaCha8Rng) -> (bool, String);
type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    /// The failure is exactly the documented one (n = 3 fine, n >= 4 broken
    /// in the documented way). Only meaningful for known failures.
    as_documented: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        as_documented: false,
        detail: detail.into(),
    }
}

fn family(n: usize) -> FamilyFan {
    build_family_fan(n).expect("n >= 3")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn limit_for(n: usize) -> Duration {
    match n {
        3 => LIMIT_N3,
        4 => LIMIT_N4,
        _ => LIMIT_N5,
    }
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut documented = true;
    let mut parts = Vec::new();
    for n in 3..=5 {
        let ((valid, rays, cones), dt) = timed(|| {
            let f = family(n).fan;
            (f.validate(), f.num_rays(), f.max_cones().len())
        });
        let shape = rays == 2 * n + 1 && cones == n * n + 1 && dt < LIMIT_N3;
        let good = valid.is_ok() && shape;
        ok &= good;
        documented &= shape && (good == (n == 3)) && (n == 3 || matches!(valid, Err(FanError::Overlap { .. })));
        let v = match valid {
            Ok(()) => "valid".to_string(),
            Err(FanError::Overlap { first, second, .. }) => format!("overlap of cones {first},{second}"),
            Err(e) => e.to_string(),
        };
        parts.push(format!(
            "n={n}: {rays} rays, {cones} cones, {v}, {:.2}s",
            dt.as_secs_f64()
        ));
    }
    Outcome {
        as_documented: documented,
        ..outcome(ok, parts.join("; "))
    }
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut documented = true;
    let mut parts = Vec::new();
    for n in 3..=5 {
        let f = family(n).fan;
        let smooth = f.is_smooth();
        let complete = f.is_complete();
        let (verdict, dt) = timed(|| is_projective(&f));
        let (good, v) = match &verdict {
            Ok(ProjectivityVerdict::NonProjective { system, certificate }) => {
                let checked = verify_farkas(system, certificate).unwrap_or(false);
                (
                    checked,
                    if checked {
                        "non-projective, certificate verified"
                    } else {
                        "certificate rejected"
                    }
                    .to_string(),
                )
            }
            Ok(ProjectivityVerdict::Projective(_)) => (false, "projective".to_string()),
            Err(e) => (false, e.to_string()),
        };
        let good = good && smooth && complete && dt < limit_for(n);
        ok &= good;
        documented &= if n == 3 {
            good
        } else {
            smooth && !complete && verdict.is_err()
        };
        parts.push(format!(
            "n={n}: smooth={smooth} complete={complete} {v} ({:.2}s)",
            dt.as_secs_f64()
        ));
    }
    Outcome {
        as_documented: documented,
        ..outcome(ok, parts.join("; "))
    }
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=6 {
        match verify_cyclic_certificate(n) {
            Ok(c) => {
                let negative = c.steps.iter().all(|s| s.coordinates.iter().any(Signed::is_negative));
                let good = c.steps.len() == n && negative;
                ok &= good;
                let farkas = match &c.farkas {
                    Some((sys, cert)) => {
                        let v = verify_farkas(sys, cert).unwrap_or(false);
                        ok &= v;
                        if v {
                            ", Farkas form verified"
                        } else {
                            ", Farkas form rejected"
                        }
                    }
                    None => "",
                };
                parts.push(format!("n={n}: {} links{farkas}", c.steps.len()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("n={n}: {e}"));
            }
        }
    }
    outcome(ok, parts.join("; "))
}

/// Brute force: minimal subsets of rays not contained in any maximal cone.
fn primitive_collections_oracle(f: &Fan) -> BTreeSet<Vec<usize>> {
    let m = f.num_rays();
    let in_cone = |s: &[usize]| f.max_cones().iter().any(|c| s.iter().all(|r| c.contains_ray(*r)));
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let s: Vec<usize> = (0..m).filter(|b| mask >> b & 1 == 1).collect();
        if in_cone(&s) {
            continue;
        }
        let minimal = (0..s.len()).all(|k| {
            let mut t = s.clone();
            t.remove(k);
            in_cone(&t)
        });
        if minimal {
            out.insert(s);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let s = family(3);
    let label_sets = |cs: Vec<Vec<usize>>| -> BTreeSet<BTreeSet<String>> {
        cs.into_iter()
            .map(|c| c.into_iter().map(|r| s.label(r)).collect())
            .collect()
    };
    let got = label_sets(
        primitive_collections(&s.fan)
            .into_iter()
            .map(|c| c.indices().to_vec())
            .collect(),
    );
    let expected: BTreeSet<BTreeSet<String>> = [
        &["a1", "b0"][..],
        &["a2", "b0"],
        &["a3", "b0"],
        &["a1", "b2"],
        &["a2", "b3"],
        &["a3", "b1"],
        &["b1", "b2", "b3"],
    ]
    .iter()
    .map(|c| c.iter().map(|x| x.to_string()).collect())
    .collect();
    let oracle = label_sets(primitive_collections_oracle(&s.fan).into_iter().collect());
    outcome(
        got == expected && got == oracle,
        format!("{} collections, equal to the listed 7 and to brute force", got.len()),
    )
}

fn criterion_5() -> Outcome {
    let s = family(3);
    let q = quasitorus(&s.fan).expect("rays span");
    let lattice = IntMat::from_i64(&[
        &[1, 0, 0, 0, 1, 1, 1],
        &[0, 1, 0, 0, 0, 1, 1],
        &[0, 0, 1, 0, 1, 0, 1],
        &[0, 0, 0, 1, 1, 1, 0],
    ]);
    let same = same_row_lattice(&q.kernel_basis, &lattice);
    // independent check: the displayed rows really are relations
    let relations_hold = q.relations.mul(&lattice.transpose()).expect("shape").is_zero();
    let free = q.invariant_factors.iter().all(One::is_one);
    let equivariant: Vec<bool> = (3..=5)
        .map(|n| check_equivariance(&family(n)).unwrap_or(false))
        .collect();
    let rel = character_relations(&s).unwrap_or_default();
    let expected_rel = ["ω'1 = ω0 + ω2 + ω3", "ω'2 = ω0 + ω1 + ω3", "ω'3 = ω0 + ω1 + ω2"];
    let ok = same && relations_hold && free && equivariant.iter().all(|&b| b) && rel == expected_rel;
    outcome(
        ok,
        format!(
            "kernel lattice equal={same}, invariant factors all 1={free}, equivariance n=3,4,5={equivariant:?}, {}",
            rel.join("; ")
        ),
    )
}

fn random_rat(rng: &mut ChaCha8Rng, nonzero: bool) -> Rat {
    loop {
        let p: i64 = rng.gen_range(-9..=9);
        let q: i64 = rng.gen_range(1..=4);
        if !nonzero || p != 0 {
            return rat(p, q);
        }
    }
}

/// A random point of `Y` whose zero set is a random cone from `cones`.
fn random_point(rng: &mut ChaCha8Rng, f: &Fan, cones: &[ConeRef]) -> RatVec {
    let zeros = cones.choose(rng).expect("nonempty");
    (0..f.num_rays())
        .map(|r| {
            if zeros.contains_ray(r) {
                Rat::zero()
            } else {
                random_rat(rng, true)
            }
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let s = family(3);
    let f = &s.fan;
    let report = match ga_orbit_report(&s) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let through_b0: Vec<ConeRef> = f.all_cones().into_iter().filter(|c| c.contains_ray(0)).collect();
    let x0_fixed = (0..20).all(|_| {
        let y = random_point(&mut rng, f, &through_b0);
        orbit_dimension(&s, &quotient_map(f, &y).unwrap()) == Ok(0)
    });
    let generic = (1..=3).all(|j| {
        (0..5).all(|_| {
            let y = random_point(&mut rng, f, &[ConeRef::new([j])]);
            orbit_dimension_at(&s, &y) == Ok(1)
        })
    });
    let base = report.base_orbit_dim == 3;
    let empty_triple = report
        .component_meetings
        .iter()
        .any(|m| m.what == "X1 ∩ X2 ∩ X3" && m.cones.is_empty());
    let singles = report
        .component_meetings
        .iter()
        .filter(|m| m.what.starts_with("X0 ∩ X") && m.what.matches('∩').count() == 2)
        .all(|m| m.points == Some(1));
    let distinct = report.triple_points.len() == 3
        && (0..3)
            .all(|a| (a + 1..3).all(|b| !points_equal(f, &report.triple_points[a], &report.triple_points[b]).unwrap()));
    let ok = report.components.len() == 4 && x0_fixed && generic && base && empty_triple && singles && distinct;
    outcome(
        ok,
        format!(
            "{} components, X0 fixed at 20 random points={x0_fixed}, generic Xj orbits 1-dim={generic}, base orbit dim {}, X1∩X2∩X3 empty={empty_triple}, three distinct triple points={distinct}",
            report.components.len(),
            report.base_orbit_dim
        ),
    )
}

fn criterion_7() -> Outcome {
    let s = family(3);
    let checks = match component_star_check(&s) {
        Ok(c) => c,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut parts = Vec::new();
    let mut ok = checks.len() == 4;
    for c in &checks {
        // recompute the star fan and apply the witness independently
        let star = star_fan(&s.fan, &ConeRef::new([c.i])).expect("smooth ray");
        let target = c.reference.fan();
        let unimodular = det(&c.witness).map(|d| d.abs().is_one()).unwrap_or(false);
        let images: BTreeSet<IntVec> = star.fan.rays().iter().map(|r| c.witness.mul_vec(r).unwrap()).collect();
        let rays_match = images == target.rays().iter().cloned().collect();
        let good = unimodular && rays_match && verify_isomorphism(&c.witness, &star.fan, &target);
        ok &= good;
        parts.push(format!(
            "b{} -> {} ({})",
            c.i,
            c.reference.name(),
            if good { "verified" } else { "rejected" }
        ));
    }
    outcome(ok, parts.join(", "))
}

/// A system in up to 40 variables whose equalities leave at most four free
/// directions, so the naive FM oracle stays cheap.
fn random_system(rng: &mut ChaCha8Rng) -> LinearSystem {
    let vars = rng.gen_range(1..=40usize);
    let free = rng.gen_range(1..=vars.min(4));
    let ineqs = rng.gen_range(1..=8usize);
    let mut order: Vec<usize> = (0..vars).collect();
    order.shuffle(rng);
    let small = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-3..=3), 1);
    let mut sys = LinearSystem::new(vars);
    // a hidden point makes about half of the systems feasible
    let hidden: RatVec = (0..vars).map(|_| rat(rng.gen_range(-4..=4), 1)).collect();
    let plant = rng.gen_bool(0.5);
    let value = |a: &RatVec| -> Rat { a.iter().zip(&hidden).map(|(x, y)| x * y).sum() };
    // pinned variable order[k] gets a unit coefficient and otherwise only
    // touches variables later in `order`: triangular, hence independent
    for k in free..vars {
        let mut a = vec![Rat::zero(); vars];
        a[order[k]] = Rat::one();
        for &j in order[..free].iter().chain(&order[k + 1..]) {
            if rng.gen_bool(0.3) {
                a[j] = small(rng);
            }
        }
        let rhs = if plant { value(&a) } else { small(rng) };
        sys.add_eq(a, rhs);
    }
    if sys.equalities.len() >= 2 && rng.gen_bool(0.15) {
        // a dependent equality, inconsistent when the offset is nonzero
        let (e, f) = (&sys.equalities[0], &sys.equalities[1]);
        let a: RatVec = e.coeffs.iter().zip(&f.coeffs).map(|(x, y)| x + y).collect();
        let rhs = &e.rhs + &f.rhs + rat(rng.gen_range(0..=1), 1);
        sys.add_eq(a, rhs);
    }
    for _ in 0..ineqs {
        let a: RatVec = (0..vars)
            .map(|_| if rng.gen_bool(0.3) { small(rng) } else { Rat::zero() })
            .collect();
        let rhs = if plant {
            value(&a) - rat(rng.gen_range(0..=2), 1)
        } else {
            small(rng)
        };
        sys.add_ge(a, rhs);
    }
    sys
}

fn suite_a(rng: &mut ChaCha8Rng) -> (bool, String) {
    let (mut agree, mut feasible_count, mut total) = (0, 0, 0);
    for _ in 0..220 {
        let sys = random_system(rng);
        total += 1;
        let simplex = feasible(&sys).expect("well formed");
        let evidence = match &simplex {
            Feasibility::Feasible(x) => sys.is_satisfied_by(x),
            Feasibility::Infeasible(c) => verify_farkas(&sys, c).unwrap_or(false),
        };
        let fm = fm_feasible(&sys).expect("well formed");
        if evidence && fm == simplex.is_feasible() {
            agree += 1;
        }
        feasible_count += usize::from(simplex.is_feasible());
    }
    (
        agree == total,
        format!("(a) {agree}/{total} systems agree ({feasible_count} feasible)"),
    )
}

fn random_direction(rng: &mut ChaCha8Rng, n: usize) -> RatVec {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-50..=50)).collect();
        if v.iter().any(|x| *x != 0) {
            return v.into_iter().map(|x| rat(x, 1)).collect();
        }
    }
}

fn without_cone(f: &Fan, k: usize) -> Fan {
    let keep: Vec<usize> = (0..f.max_cones().len()).filter(|&i| i != k).collect();
    f.restrict(&keep).expect("sub-fan")
}

fn suite_b(rng: &mut ChaCha8Rng) -> (bool, String) {
    let p1 = projective_space(1);
    let sigma3 = family(3).fan;
    let mut fans: Vec<Fan> = vec![
        projective_space(1),
        projective_space(2),
        projective_space(3),
        product(&p1, &p1),
        product(&product(&p1, &p1), &p1),
        product(&projective_space(2), &p1),
        sigma3.clone(),
        star_fan(&sigma3, &ConeRef::new([1])).unwrap().fan,
        star_fan(&sigma3, &ConeRef::new([0])).unwrap().fan,
        fancert_core::fan::standard::affine_space(2),
        fancert_core::fan::standard::affine_space(3),
    ];
    for k in [0, 3, 7] {
        fans.push(without_cone(&sigma3, k));
    }
    fans.push(without_cone(&projective_space(2), 1));
    fans.push(without_cone(&product(&p1, &p1), 2));
    for _ in 0..6 {
        fans.push(random_polygon_fan(rng));
    }
    let mut ok = true;
    for f in &fans {
        let covered = (0..1000).all(|_| {
            let v = random_direction(rng, f.rank());
            f.max_cones().iter().any(|c| f.cone_contains(c, &v))
        });
        ok &= covered == f.is_complete();
    }
    (
        ok,
        format!("(b) {} fans x 1000 directions agree with is_complete", fans.len()),
    )
}

fn random_polygon(rng: &mut ChaCha8Rng) -> Polytope {
    loop {
        let k = rng.gen_range(3..=8);
        let pts: Vec<IntVec> = (0..k)
            .map(|_| vec![rng.gen_range(-6..=6).into(), rng.gen_range(-6..=6).into()])
            .collect();
        let p = Polytope::new(2, pts);
        if dual_fan_of_polytope(&p).is_ok() {
            return p;
        }
    }
}

fn random_polygon_fan(rng: &mut ChaCha8Rng) -> Fan {
    dual_fan_of_polytope(&random_polygon(rng)).expect("filtered")
}

fn v3(x: i64, y: i64, z: i64) -> IntVec {
    vec![x.into(), y.into(), z.into()]
}

fn random_polytope_3(rng: &mut ChaCha8Rng, kind: usize) -> Polytope {
    let r = |rng: &mut ChaCha8Rng| rng.gen_range(1..=4i64);
    match kind {
        0 => {
            // box
            let (a, b, c, d, e, f) = (r(rng), r(rng), r(rng), r(rng), r(rng), r(rng));
            let mut v = Vec::new();
            for x in [-a, b] {
                for y in [-c, d] {
                    for z in [-e, f] {
                        v.push(v3(x, y, z));
                    }
                }
            }
            Polytope::new(3, v)
        }
        1 => {
            // box with the corner (b, d, f) cut off by a unit simplex
            let (a, b, c, d, e, f) = (r(rng), r(rng) + 1, r(rng), r(rng) + 1, r(rng), r(rng) + 1);
            let mut v = Vec::new();
            for x in [-a, b] {
                for y in [-c, d] {
                    for z in [-e, f] {
                        if (x, y, z) != (b, d, f) {
                            v.push(v3(x, y, z));
                        }
                    }
                }
            }
            v.extend([v3(b - 1, d, f), v3(b, d - 1, f), v3(b, d, f - 1)]);
            Polytope::new(3, v)
        }
        2 => {
            // prism over a random polygon
            let base = random_polygon(rng);
            let (lo, hi) = (r(rng), r(rng));
            let mut v = Vec::new();
            for p in &base.vertices {
                v.push(vec![p[0].clone(), p[1].clone(), (-lo).into()]);
                v.push(vec![p[0].clone(), p[1].clone(), hi.into()]);
            }
            Polytope::new(3, v)
        }
        _ => loop {
            // simplex with the origin as centroid
            let pts: Vec<IntVec> = (0..3)
                .map(|_| v3(rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4)))
                .collect();
            let last: IntVec = (0..3).map(|i| -(&pts[0][i] + &pts[1][i] + &pts[2][i])).collect();
            let mut v = pts;
            v.push(last);
            let p = Polytope::new(3, v);
            if dual_fan_of_polytope(&p).is_ok() {
                return p;
            }
        },
    }
}

fn suite_c(rng: &mut ChaCha8Rng) -> (bool, String) {
    let mut polys = Vec::new();
    for _ in 0..12 {
        polys.push(random_polygon(rng));
    }
    for i in 0..16 {
        polys.push(random_polytope_3(rng, i % 4));
    }
    let mut ok = true;
    let mut bad = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        let good = match dual_fan_of_polytope(p) {
            Ok(f) => f.validate().is_ok() && f.is_complete() && matches!(is_projective(&f), Ok(v) if v.is_projective()),
            Err(_) => false,
        };
        if !good {
            bad.push(i);
        }
        ok &= good;
    }
    (
        ok,
        format!(
            "(c) {}/{} dual fans projective{}",
            polys.len() - bad.len(),
            polys.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!(" (failed: {bad:?})")
            }
        ),
    )
}

fn suite_d(rng: &mut ChaCha8Rng) -> (bool, String) {
    let fans = [
        family(3).fan,
        projective_space(2),
        product(&projective_space(1), &projective_space(2)),
    ];
    let mut ok = true;
    let mut count = 0;
    for i in 0..100 {
        let f = &fans[i % fans.len()];
        let q = quasitorus(f).unwrap();
        let cones = f.all_cones();
        let y = random_point(rng, f, &cones);
        let g = GroupElement::new((0..q.dim()).map(|_| random_rat(rng, true)).collect());
        let gy = group_act(&q, &g, &y).unwrap();
        let (x, gx) = (quotient_map(f, &y).unwrap(), quotient_map(f, &gy).unwrap());
        ok &=
            x == gx && points_equal(f, &x, &gx).unwrap() && orbit_label(f, &x).unwrap() == orbit_label(f, &gx).unwrap();
        count += 1;
    }
    (ok, format!("(d) {count} (g, y) pairs: π(g·y) = π(y)"))
}

fn suite_e(rng: &mut ChaCha8Rng) -> (bool, String) {
    let s = family(3);
    let f = &s.fan;
    let q = quasitorus(f).unwrap();
    let cones = f.all_cones();
    let mut ok = true;
    for _ in 0..100 {
        let y = random_point(rng, f, &cones);
        let c: RatVec = (0..3).map(|_| random_rat(rng, false)).collect();
        let d: RatVec = (0..3).map(|_| random_rat(rng, false)).collect();
        let cd: RatVec = c.iter().zip(&d).map(|(a, b)| a + b).collect();
        let additive =
            additive_act(&s, &cd, &y).unwrap() == additive_act(&s, &c, &additive_act(&s, &d, &y).unwrap()).unwrap();
        let down = {
            let x = quotient_map(f, &y).unwrap();
            let moved = quotient_map(f, &additive_act(&s, &c, &y).unwrap()).unwrap();
            points_equal(f, &moved, &additive_act_x(&s, &c, &x).unwrap()).unwrap()
        };
        let g = GroupElement::new((0..q.dim()).map(|_| random_rat(rng, true)).collect());
        let up = additive_act(&s, &c, &group_act(&q, &g, &y).unwrap()).unwrap()
            == group_act(&q, &g, &additive_act(&s, &c, &y).unwrap()).unwrap();
        ok &= additive && down && up;
    }
    (
        ok,
        "(e) 100 (c, y) pairs: additive in c, commutes with G and with π".to_string(),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let suites: [Suite; 5] = [suite_a, suite_b, suite_c, suite_d, suite_e];
    let results: Vec<(bool, String)> = suites
        .iter()
        .map(|s| {
            let ((ok, msg), dt) = timed(|| s(&mut rng));
            (ok, format!("{msg} [{:.2}s]", dt.as_secs_f64()))
        })
        .collect();
    let ok = results.iter().all(|(b, _)| *b);
    outcome(
        ok,
        results.iter().map(|(_, s)| s.as_str()).collect::<Vec<_>>().join("; "),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "family structure", criterion_1),
        (2, "smooth, complete, non-projective", criterion_2),
        (3, "cyclic certificate", criterion_3),
        (4, "primitive collections", criterion_4),
        (5, "quasitorus and equivariance", criterion_5),
        (6, "orbit structure", criterion_6),
        (7, "star-fan identifications", criterion_7),
        (8, "property suites", criterion_8),
    ];
    let start = Instant::now();
    let mut unexpected = false;
    for (id, name, run) in criteria {
        let (o, dt) = timed(run);
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map(|(_, why)| *why);
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = match (o.pass, known) {
            (false, Some(why)) if o.as_documented => format!(" [known: {why}]"),
            (false, Some(_)) => {
                unexpected = true;
                " [known failure, but not in the documented way]".to_string()
            }
            (true, Some(_)) => {
                unexpected = true;
                " [listed as a known failure but passed]".to_string()
            }
            (false, None) => {
                unexpected = true;
                String::new()
            }
            (true, None) => String::new(),
        };
        println!(
            "criterion {id} {status} {name} ({:.2}s): {}{note}",
            dt.as_secs_f64(),
            o.detail
        );
    }
    let total = start.elapsed();
    let within = total < LIMIT_SUITE;
    println!(
        "suite {} total {:.2}s (limit {}s)",
        if within { "PASS" } else { "FAIL" },
        total.as_secs_f64(),
        LIMIT_SUITE.as_secs()
    );
    if unexpected || !within {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
