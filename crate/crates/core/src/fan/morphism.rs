//! Lattice maps between fans: compatibility, images of orbits and
//! isomorphisms.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{ConeRef, Fan};
use crate::linalg::{to_rat_vec, unimodular_inverse, IntMat, RatVec};
use crate::FanError;

fn check_shape(a: &IntMat, source: &Fan, target: &Fan) -> Result<(), FanError> {
    if a.rows() != target.rank() || a.cols() != source.rank() {
        return Err(FanError::MapShape {
            rows: a.rows(),
            cols: a.cols(),
            expected_rows: target.rank(),
            expected_cols: source.rank(),
        });
    }
    Ok(())
}

fn images(a: &IntMat, f: &Fan, cone: &ConeRef) -> Vec<RatVec> {
    cone.indices()
        .iter()
        .map(|&r| to_rat_vec(&a.mul_vec(f.ray(r)).expect("shape checked")))
        .collect()
}

/// Whether `a` sends every cone of `source` into some cone of `target`.
pub fn map_compatible(a: &IntMat, source: &Fan, target: &Fan) -> Result<bool, FanError> {
    check_shape(a, source, target)?;
    Ok(source.max_cones().iter().all(|c| {
        let imgs = images(a, source, c);
        target
            .max_cones()
            .iter()
            .any(|t| imgs.iter().all(|v| target.cone_contains(t, v)))
    }))
}

/// The smallest cone of `target` containing the image of `cone`; the orbit
/// `O(cone)` is sent into `O(result)` by the toric morphism.
pub fn orbit_image(a: &IntMat, source: &Fan, target: &Fan, cone: &ConeRef) -> Result<ConeRef, FanError> {
    check_shape(a, source, target)?;
    if !source.is_cone(cone) {
        return Err(FanError::UnknownCone(cone.clone()));
    }
    let imgs = images(a, source, cone);
    let mut result: Option<ConeRef> = None;
    for t in target.max_cones() {
        let coords: Option<Vec<RatVec>> = imgs.iter().map(|v| target.cone_coordinates(t, v)).collect();
        let Some(coords) = coords else { continue };
        if coords.iter().flatten().any(Signed::is_negative) {
            continue;
        }
        let support = ConeRef::new(
            t.indices()
                .iter()
                .enumerate()
                .filter(|(k, _)| coords.iter().any(|c| !c[*k].is_zero()))
                .map(|(_, &r)| r),
        );
        result = Some(match result {
            None => support,
            Some(prev) => prev.intersection(&support),
        });
    }
    let found = result.ok_or(FanError::Incompatible)?;
    if !imgs.iter().all(|v| target.cone_contains(&found, v)) {
        return Err(FanError::Incompatible);
    }
    Ok(found)
}

/// All orderings of `0..n`, lexicographic.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..n {
            let mut p: Vec<usize> = rest.iter().map(|&x| x + 1).collect();
            p.insert(pos, 0);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Searches for a unimodular `A` sending rays to rays and maximal cones to
/// maximal cones. One full-dimensional cone of `f1` is fixed and matched
/// against every ordering of every full-dimensional cone of `f2`.
pub fn fan_isomorphic(f1: &Fan, f2: &Fan) -> Result<Option<IntMat>, FanError> {
    if !f1.is_smooth() || !f2.is_smooth() {
        return Err(FanError::NotSmooth);
    }
    let n = f1.rank();
    if f2.rank() != n || f1.num_rays() != f2.num_rays() || f1.max_cones().len() != f2.max_cones().len() {
        return Ok(None);
    }
    let base = f1
        .max_cones()
        .iter()
        .find(|c| c.dim() == n)
        .ok_or(FanError::NoFullCone)?;
    let base_inv = unimodular_inverse(&f1.generator_matrix(base)).ok_or(FanError::NotSmooth)?;
    let target_cones: BTreeSet<&ConeRef> = f2.max_cones().iter().collect();
    for t in f2.max_cones().iter().filter(|c| c.dim() == n) {
        for perm in permutations(n) {
            let cols: Vec<_> = perm.iter().map(|&p| f2.ray(t.indices()[p]).clone()).collect();
            let a = IntMat::from_columns(n, &cols).mul(&base_inv).expect("square");
            if is_isomorphism(&a, f1, f2, &target_cones) {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

fn is_isomorphism(a: &IntMat, f1: &Fan, f2: &Fan, target_cones: &BTreeSet<&ConeRef>) -> bool {
    let mut ray_map = Vec::with_capacity(f1.num_rays());
    for r in f1.rays() {
        match f2.ray_index(&a.mul_vec(r).expect("square")) {
            Some(i) => ray_map.push(i),
            None => return false,
        }
    }
    let distinct: BTreeSet<usize> = ray_map.iter().copied().collect();
    if distinct.len() != ray_map.len() {
        return false;
    }
    let mapped: BTreeSet<ConeRef> = f1
        .max_cones()
        .iter()
        .map(|c| ConeRef::new(c.indices().iter().map(|&r| ray_map[r])))
        .collect();
    mapped.len() == target_cones.len() && mapped.iter().all(|c| target_cones.contains(c))
}

/// Checks that `a` maps the rays and maximal cones of `f1` bijectively onto
/// those of `f2` and is invertible over the integers.
pub fn verify_isomorphism(a: &IntMat, f1: &Fan, f2: &Fan) -> bool {
    let cones: BTreeSet<&ConeRef> = f2.max_cones().iter().collect();
    a.rows() == f2.rank()
        && a.cols() == f1.rank()
        && unimodular_inverse(a).is_some()
        && f1.num_rays() == f2.num_rays()
        && is_isomorphism(a, f1, f2, &cones)
}
