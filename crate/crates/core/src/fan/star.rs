//! Star (quotient) fans: the fan of the orbit closure `V(τ)` in `N / N_τ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{ConeRef, Fan};
use crate::linalg::{
    invariant_factors, kernel_basis_z, primitive, same_row_lattice, snf, unimodular_inverse, Int, IntMat, IntVec,
};
use crate::FanError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarFan {
    pub fan: Fan,
    /// `(n - dim τ) x n` surjection `N → N/N_τ` with kernel `N_τ`.
    pub projection: IntMat,
    /// Index in the original fan of the ray each new ray comes from.
    pub ray_origin: Vec<usize>,
}

/// Star fan of `tau` with a canonical choice of quotient coordinates.
///
/// The complement of `N_τ` is built greedily from standard basis vectors,
/// scanning `e_n` down to `e_1`, and the chosen vectors become the new
/// coordinate axes in increasing order. When no such complement exists the
/// projection falls back to the Smith form of the generator matrix.
pub fn star_fan(f: &Fan, tau: &ConeRef) -> Result<StarFan, FanError> {
    if !f.is_cone(tau) {
        return Err(FanError::UnknownCone(tau.clone()));
    }
    if !f.cone_is_smooth(tau) {
        return Err(FanError::NotSmooth);
    }
    let gens = f.generators(tau);
    let p = standard_complement_projection(f.rank(), &gens).unwrap_or_else(|| smith_projection(f.rank(), &gens));
    star_fan_with_projection(f, tau, &p)
}

/// Star fan of `tau` through a caller-supplied projection, which must be a
/// surjection `ℤⁿ → ℤ^{n-dim τ}` whose kernel is exactly the lattice spanned
/// by the generators of `tau`.
pub fn star_fan_with_projection(f: &Fan, tau: &ConeRef, projection: &IntMat) -> Result<StarFan, FanError> {
    if !f.is_cone(tau) {
        return Err(FanError::UnknownCone(tau.clone()));
    }
    let n = f.rank();
    let k = tau.dim();
    if projection.rows() != n - k || projection.cols() != n {
        return Err(FanError::MapShape {
            rows: projection.rows(),
            cols: projection.cols(),
            expected_rows: n - k,
            expected_cols: n,
        });
    }
    let gens = f.generators(tau);
    if n > k {
        if !invariant_factors(projection).iter().all(One::is_one) {
            return Err(FanError::Projection("map is not surjective".into()));
        }
        let kernel = kernel_basis_z(projection);
        let span = IntMat::from_rows(n, gens.clone()).expect("generators have rank length");
        let same = if k == 0 {
            kernel.rows() == 0
        } else {
            same_row_lattice(&kernel, &span)
        };
        if !same {
            return Err(FanError::Projection("kernel is not the lattice of the cone".into()));
        }
    }

    let mut image_index: BTreeMap<IntVec, usize> = BTreeMap::new();
    let mut rays = Vec::new();
    let mut origin = Vec::new();
    let mut cones = Vec::new();
    let mut new_index = |r: usize| -> Result<usize, FanError> {
        let img = projection.mul_vec(f.ray(r)).expect("shape checked");
        let img =
            primitive(&img).map_err(|_| FanError::Projection(format!("ray {r} outside the cone maps to zero")))?;
        Ok(*image_index.entry(img.clone()).or_insert_with(|| {
            rays.push(img);
            origin.push(r);
            rays.len() - 1
        }))
    };
    // Visit rays in original order so the numbering is stable.
    let containing: Vec<&ConeRef> = f.max_cones().iter().filter(|c| tau.is_face_of(c)).collect();
    let mut adjacent: Vec<usize> = containing
        .iter()
        .flat_map(|c| c.indices().iter().copied())
        .filter(|r| !tau.contains_ray(*r))
        .collect();
    adjacent.sort_unstable();
    adjacent.dedup();
    let mut map = BTreeMap::new();
    for r in adjacent {
        map.insert(r, new_index(r)?);
    }
    for c in containing {
        cones.push(
            c.indices()
                .iter()
                .filter(|r| !tau.contains_ray(**r))
                .map(|r| map[r])
                .collect::<Vec<_>>(),
        );
    }
    let fan = Fan::new(n - k, rays, cones)?;
    Ok(StarFan {
        fan,
        projection: projection.clone(),
        ray_origin: origin,
    })
}

fn unit(n: usize, j: usize) -> IntVec {
    (0..n).map(|i| if i == j { Int::one() } else { Int::zero() }).collect()
}

fn standard_complement_projection(n: usize, gens: &[IntVec]) -> Option<IntMat> {
    let k = gens.len();
    let mut chosen: Vec<usize> = Vec::new();
    for j in (0..n).rev() {
        if chosen.len() == n - k {
            break;
        }
        let mut cols = gens.to_vec();
        cols.extend(chosen.iter().map(|&c| unit(n, c)));
        cols.push(unit(n, j));
        let m = IntMat::from_columns(n, &cols);
        if invariant_factors(&m).iter().all(One::is_one) {
            chosen.push(j);
        }
    }
    if chosen.len() != n - k {
        return None;
    }
    chosen.sort_unstable();
    let mut cols = gens.to_vec();
    cols.extend(chosen.iter().map(|&c| unit(n, c)));
    let inv = unimodular_inverse(&IntMat::from_columns(n, &cols))?;
    let rows = (k..n).map(|i| inv.row(i).to_vec()).collect();
    Some(IntMat::from_rows(n, rows).expect("rows of the inverse"))
}

fn smith_projection(n: usize, gens: &[IntVec]) -> IntMat {
    let k = gens.len();
    if k == 0 {
        return IntMat::identity(n);
    }
    let (_, u, _) = snf(&IntMat::from_columns(n, gens));
    let rows = (k..n).map(|i| u.row(i).to_vec()).collect();
    IntMat::from_rows(n, rows).expect("rows of U")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard::*;
    use crate::linalg::int_vec;

    #[test]
    fn zero_cone_gives_the_fan_back() {
        let f = projective_space(2);
        let s = star_fan(&f, &ConeRef::zero()).unwrap();
        assert_eq!(s.projection, IntMat::identity(2));
        assert_eq!(s.fan, f);
    }

    #[test]
    fn star_of_a_ray_of_p2_is_p1() {
        let f = projective_space(2);
        let s = star_fan(&f, &ConeRef::new([0])).unwrap();
        assert_eq!(s.fan.rank(), 1);
        assert_eq!(s.fan.num_rays(), 2);
        assert!(s.fan.is_complete());
        assert!(s.fan.validate().is_ok());
    }

    #[test]
    fn smith_fallback_for_awkward_rays() {
        // (2, 3) cannot be completed by a standard vector
        let f = Fan::new(
            2,
            alloc::vec![int_vec(&[2, 3]), int_vec(&[1, 1])],
            alloc::vec![alloc::vec![0, 1]],
        )
        .unwrap();
        assert!(standard_complement_projection(2, &[int_vec(&[2, 3])]).is_none());
        let s = star_fan(&f, &ConeRef::new([0])).unwrap();
        assert_eq!(s.projection.mul_vec(&int_vec(&[2, 3])).unwrap(), int_vec(&[0]));
        assert_eq!(s.fan.num_rays(), 1);
    }

    #[test]
    fn rejects_bad_projection() {
        let f = projective_space(2);
        let p = IntMat::from_i64(&[&[2, 0]]);
        assert!(star_fan_with_projection(&f, &ConeRef::new([1]), &p).is_err());
        let q = IntMat::from_i64(&[&[0, 1]]);
        assert!(star_fan_with_projection(&f, &ConeRef::new([1]), &q).is_err());
        assert!(matches!(
            star_fan(&f, &ConeRef::new([0, 1, 2])),
            Err(FanError::UnknownCone(_))
        ));
    }
}
