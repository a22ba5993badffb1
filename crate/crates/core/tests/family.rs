//! End-to-end use of the public API on `Σ₃` and friends.

use fancert_core::additive::{additive_act_x, base_point, build_family_fan, ga_orbit_report, open_orbit_params};
use fancert_core::fan::standard::{product, projective_space};
use fancert_core::fan::{fan_isomorphic, orbit_poset, star_fan};
use fancert_core::linalg::rat;
use fancert_core::projectivity::is_projective;
use fancert_core::{ConeRef, FamilyError};

#[test]
fn sigma3_pipeline() {
    let s = build_family_fan(3).unwrap();
    s.fan.validate().unwrap();
    assert!(s.fan.is_smooth() && s.fan.is_complete());
    assert!(!is_projective(&s.fan).unwrap().is_projective());

    // 7 rays, 15 two-dimensional cones, 10 chambers; Euler characteristic 10
    let poset = orbit_poset(&s.fan);
    assert_eq!(poset.f_vector(), vec![1, 7, 15, 10]);

    // the open orbit of the additive action is the base chart
    let c = vec![rat(1, 2), rat(-3, 1), rat(7, 5)];
    let x = additive_act_x(&s, &c, &base_point(&s)).unwrap();
    assert_eq!(open_orbit_params(&s, &x).unwrap(), Some(c));

    let report = ga_orbit_report(&s).unwrap();
    assert_eq!(report.base_orbit_dim, 3);
}

#[test]
fn projective_neighbours_are_projective() {
    let p1 = projective_space(1);
    for f in [
        projective_space(3),
        product(&projective_space(2), &p1),
        product(&product(&p1, &p1), &p1),
    ] {
        assert!(is_projective(&f).unwrap().is_projective());
    }
}

#[test]
fn stars_of_sigma3_are_projective_surfaces() {
    let s = build_family_fan(3).unwrap();
    for i in 0..s.fan.num_rays() {
        let star = star_fan(&s.fan, &ConeRef::new([i])).unwrap().fan;
        assert!(star.is_complete() && star.is_smooth());
        assert!(is_projective(&star).unwrap().is_projective());
    }
    // X0 is P2, but the divisor of a1 is not
    let a1 = star_fan(&s.fan, &ConeRef::new([s.a(1)])).unwrap().fan;
    let b0 = star_fan(&s.fan, &ConeRef::new([0])).unwrap().fan;
    assert!(fan_isomorphic(&a1, &b0).unwrap().is_none());
}

#[test]
fn family_rejects_small_n() {
    assert!(matches!(build_family_fan(2), Err(FamilyError::TooSmall(2))));
}
