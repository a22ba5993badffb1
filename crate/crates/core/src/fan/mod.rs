//! Simplicial fans.
//!
//! A [`Fan`] is a list of primitive ray generators and a list of maximal
//! cones, each given by the indices of its rays. Because every cone is
//! simplicial its faces are exactly the subsets of its ray set, so most of the
//! combinatorics below is set manipulation on [`ConeRef`]s once the fan has
//! passed [`Fan::validate`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::{
    det, invariant_factors, primitive, rank_int, rat, rat_from_int, solve_rat, to_rat_vec, Int, IntMat, IntVec, Rat,
    RatVec,
};
use crate::lp::{feasible, Feasibility, LinearSystem};
use crate::FanError;

mod combinatorics;
mod morphism;
mod polytope;
pub mod standard;
mod star;

pub use combinatorics::{
    closure_intersection, closure_intersection_all, orbit_poset, primitive_collections, OrbitPoset,
};
pub use morphism::{fan_isomorphic, map_compatible, orbit_image, verify_isomorphism};
pub use polytope::{dual_fan_of_polytope, Polytope};
pub use star::{star_fan, star_fan_with_projection, StarFan};

/// A cone of a simplicial fan, named by the sorted set of its ray indices.
/// The empty set is the zero cone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ConeRef(Vec<usize>);

impl ConeRef {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        ConeRef(set.into_iter().collect())
    }

    pub fn zero() -> Self {
        ConeRef(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_ray(&self, ray: usize) -> bool {
        self.0.binary_search(&ray).is_ok()
    }

    /// `self` is a face of `other`.
    pub fn is_face_of(&self, other: &ConeRef) -> bool {
        self.0.iter().all(|r| other.contains_ray(*r))
    }

    pub fn union(&self, other: &ConeRef) -> ConeRef {
        ConeRef::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn intersection(&self, other: &ConeRef) -> ConeRef {
        ConeRef(self.0.iter().copied().filter(|r| other.contains_ray(*r)).collect())
    }

    pub fn without(&self, ray: usize) -> ConeRef {
        ConeRef(self.0.iter().copied().filter(|&r| r != ray).collect())
    }
}

impl fmt::Debug for ConeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl From<&[usize]> for ConeRef {
    fn from(v: &[usize]) -> Self {
        ConeRef::new(v.iter().copied())
    }
}

/// An `(n-1)`-dimensional face of a maximal cone and the maximal cones that
/// contain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub shared: ConeRef,
    pub incident: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<IntVec>,
    max_cones: Vec<ConeRef>,
}

impl Fan {
    /// Checks the structural invariants: primitive pairwise distinct rays,
    /// valid indices, simplicial and pairwise non-nested maximal cones.
    ///
    /// The pairwise intersection axiom is checked separately by
    /// [`Fan::validate`] since it needs linear programming.
    pub fn new(rank: usize, rays: Vec<IntVec>, max_cones: Vec<Vec<usize>>) -> Result<Self, FanError> {
        if rank == 0 {
            return Err(FanError::ZeroRank);
        }
        for (index, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return Err(FanError::RayLength {
                    index,
                    rank,
                    found: r.len(),
                });
            }
            let p = primitive(r).map_err(|_| FanError::ZeroRay(index))?;
            if &p != r {
                return Err(FanError::NotPrimitive(index));
            }
        }
        let mut seen: BTreeMap<&IntVec, usize> = BTreeMap::new();
        for (i, r) in rays.iter().enumerate() {
            if let Some(&j) = seen.get(r) {
                return Err(FanError::DuplicateRay(j, i));
            }
            seen.insert(r, i);
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (ci, c) in max_cones.iter().enumerate() {
            if let Some(&ray) = c.iter().find(|&&r| r >= rays.len()) {
                return Err(FanError::RayIndex {
                    cone: ci,
                    ray,
                    count: rays.len(),
                });
            }
            let cone = ConeRef::new(c.iter().copied());
            if cone.dim() != c.len() {
                return Err(FanError::RepeatedIndex(ci));
            }
            let gens: Vec<IntVec> = cone.indices().iter().map(|&r| rays[r].clone()).collect();
            if !gens.is_empty() && rank_int(&IntMat::from_columns(rank, &gens)) != gens.len() {
                return Err(FanError::NotSimplicial(ci));
            }
            cones.push(cone);
        }
        for i in 0..cones.len() {
            for j in 0..cones.len() {
                if i == j {
                    continue;
                }
                if cones[i] == cones[j] {
                    return Err(FanError::DuplicateCone(i.min(j), i.max(j)));
                }
                if cones[i].is_face_of(&cones[j]) {
                    return Err(FanError::NestedCone(i, j));
                }
            }
        }
        Ok(Fan {
            rank,
            rays,
            max_cones: cones,
        })
    }

    /// Builds and fully validates a fan.
    pub fn validated(rank: usize, rays: Vec<IntVec>, max_cones: Vec<Vec<usize>>) -> Result<Self, FanError> {
        let f = Fan::new(rank, rays, max_cones)?;
        f.validate()?;
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &IntVec {
        &self.rays[i]
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[ConeRef] {
        &self.max_cones
    }

    pub fn ray_index(&self, v: &[Int]) -> Option<usize> {
        self.rays.iter().position(|r| r.as_slice() == v)
    }

    pub fn max_cone_index(&self, cone: &ConeRef) -> Option<usize> {
        self.max_cones.iter().position(|c| c == cone)
    }

    pub fn generators(&self, cone: &ConeRef) -> Vec<IntVec> {
        cone.indices().iter().map(|&r| self.rays[r].clone()).collect()
    }

    /// `rank x dim` matrix whose columns are the cone's generators.
    pub fn generator_matrix(&self, cone: &ConeRef) -> IntMat {
        IntMat::from_columns(self.rank, &self.generators(cone))
    }

    /// Whether `cone` is a cone of the fan (a face of some maximal cone).
    pub fn is_cone(&self, cone: &ConeRef) -> bool {
        cone.indices().iter().all(|&r| r < self.rays.len())
            && (cone.is_zero() && !self.max_cones.is_empty() || self.max_cones.iter().any(|m| cone.is_face_of(m)))
    }

    pub fn max_cones_containing(&self, cone: &ConeRef) -> Vec<usize> {
        (0..self.max_cones.len())
            .filter(|&i| cone.is_face_of(&self.max_cones[i]))
            .collect()
    }

    /// Every cone of the fan, zero cone included, ordered by dimension and
    /// then lexicographically.
    pub fn all_cones(&self) -> Vec<ConeRef> {
        let mut set = BTreeSet::new();
        for m in &self.max_cones {
            let idx = m.indices();
            for mask in 0u64..(1u64 << idx.len()) {
                set.insert(ConeRef(
                    (0..idx.len()).filter(|b| mask >> b & 1 == 1).map(|b| idx[b]).collect(),
                ));
            }
        }
        let mut cones: Vec<ConeRef> = set.into_iter().collect();
        cones.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        cones
    }

    /// All `(n-1)`-faces of full-dimensional maximal cones, deduplicated by
    /// ray set.
    pub fn walls(&self) -> Vec<Wall> {
        let mut map: BTreeMap<ConeRef, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.max_cones.iter().enumerate() {
            if c.dim() != self.rank {
                continue;
            }
            for &r in c.indices() {
                map.entry(c.without(r)).or_default().push(ci);
            }
        }
        map.into_iter()
            .map(|(shared, incident)| Wall { shared, incident })
            .collect()
    }

    /// Coefficients of `v` in the generators of `cone`, if `v` lies in their
    /// linear span. Nonnegative coefficients mean `v` lies in the cone.
    pub fn cone_coordinates(&self, cone: &ConeRef, v: &[Rat]) -> Option<RatVec> {
        let gens = self.generators(cone);
        cone_coordinates(self.rank, &gens, v)
    }

    pub fn cone_contains(&self, cone: &ConeRef, v: &[Rat]) -> bool {
        self.cone_coordinates(cone, v)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Checks that any two maximal cones meet in a common face.
    ///
    /// For each pair a separating functional is sought that is positive on
    /// the first cone's private rays, negative on the second's and zero on
    /// the shared ones. When none exists, the error carries a point of the
    /// overlap outside the shared face.
    pub fn validate(&self) -> Result<(), FanError> {
        for i in 0..self.max_cones.len() {
            for j in i + 1..self.max_cones.len() {
                self.check_pair(i, j)?;
            }
        }
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), FanError> {
        let (a, b) = (&self.max_cones[i], &self.max_cones[j]);
        let shared = a.intersection(b);
        let n = self.rank;
        let mut sys = LinearSystem::new(n);
        for &r in a.indices() {
            let g = to_rat_vec(&self.rays[r]);
            if shared.contains_ray(r) {
                sys.add_eq(g, Rat::zero());
            } else {
                sys.add_ge(g, Rat::one());
            }
        }
        for &r in b.indices() {
            if !shared.contains_ray(r) {
                let g = self.rays[r].iter().map(|x| -rat_from_int(x)).collect();
                sys.add_ge(g, Rat::one());
            }
        }
        let separated = feasible(&sys).map_err(|_| FanError::Incompatible)?.is_feasible();
        if separated {
            return Ok(());
        }
        Err(FanError::Overlap {
            first: i,
            second: j,
            witness: self.overlap_point(a, b, &shared),
        })
    }

    /// A point `Σ λ g = Σ μ h` of both cones with `Σ_{g ∉ shared} λ_g >= 1`.
    fn overlap_point(&self, a: &ConeRef, b: &ConeRef, shared: &ConeRef) -> Option<RatVec> {
        let (ka, kb) = (a.dim(), b.dim());
        let mut sys = LinearSystem::new(ka + kb);
        for row in 0..self.rank {
            let mut coeffs = vec![Rat::zero(); ka + kb];
            for (k, &r) in a.indices().iter().enumerate() {
                coeffs[k] = rat_from_int(&self.rays[r][row]);
            }
            for (k, &r) in b.indices().iter().enumerate() {
                coeffs[ka + k] = -rat_from_int(&self.rays[r][row]);
            }
            sys.add_eq(coeffs, Rat::zero());
        }
        for k in 0..ka + kb {
            let mut e = vec![Rat::zero(); ka + kb];
            e[k] = Rat::one();
            sys.add_ge(e, Rat::zero());
        }
        let mut private = vec![Rat::zero(); ka + kb];
        for (k, &r) in a.indices().iter().enumerate() {
            if !shared.contains_ray(r) {
                private[k] = Rat::one();
            }
        }
        sys.add_ge(private, Rat::one());
        match feasible(&sys).ok()? {
            Feasibility::Feasible(x) => {
                let mut p = vec![Rat::zero(); self.rank];
                for (k, &r) in a.indices().iter().enumerate() {
                    for (pi, g) in p.iter_mut().zip(&self.rays[r]) {
                        *pi += &x[k] * rat_from_int(g);
                    }
                }
                Some(p)
            }
            Feasibility::Infeasible(_) => None,
        }
    }

    /// Every maximal cone is generated by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.max_cones.iter().all(|c| self.cone_is_smooth(c))
    }

    pub fn cone_is_smooth(&self, cone: &ConeRef) -> bool {
        if cone.is_zero() {
            return true;
        }
        let g = self.generator_matrix(cone);
        if cone.dim() == self.rank {
            det(&g).is_ok_and(|d| d.abs().is_one())
        } else {
            invariant_factors(&g).iter().all(One::is_one)
        }
    }

    /// Pure of full dimension and every wall lies in exactly two maximal
    /// cones.
    pub fn is_complete(&self) -> bool {
        !self.max_cones.is_empty()
            && self.max_cones.iter().all(|c| c.dim() == self.rank)
            && self.walls().iter().all(|w| w.incident.len() == 2)
    }

    /// Sub-fan on a subset of the maximal cones, keeping the ray list.
    pub fn restrict(&self, keep: &[usize]) -> Result<Fan, FanError> {
        let cones = keep.iter().map(|&i| self.max_cones[i].indices().to_vec()).collect();
        Fan::new(self.rank, self.rays.clone(), cones)
    }

    /// Whether every ray appears in some maximal cone.
    pub fn rays_all_used(&self) -> bool {
        (0..self.rays.len()).all(|r| self.max_cones.iter().any(|c| c.contains_ray(r)))
    }
}

impl fmt::Debug for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fan")
            .field("rank", &self.rank)
            .field("rays", &self.rays)
            .field("max_cones", &self.max_cones)
            .finish()
    }
}

/// Coefficients of `v` with respect to linearly independent generators.
pub fn cone_coordinates(rank: usize, gens: &[IntVec], v: &[Rat]) -> Option<RatVec> {
    let rows: Vec<RatVec> = (0..rank)
        .map(|i| gens.iter().map(|g| rat_from_int(&g[i])).collect())
        .collect();
    let x = solve_rat(&rows, gens.len(), v)?;
    // solve_rat only guarantees a solution of the consistent system, which is
    // unique here; still confirm it reproduces v.
    let back: Vec<Rat> = (0..rank)
        .map(|i| {
            gens.iter()
                .zip(&x)
                .map(|(g, c)| c * rat_from_int(&g[i]))
                .fold(Rat::zero(), |a, b| a + b)
        })
        .collect();
    (back.as_slice() == v).then_some(x)
}

/// Sum of a cone's generators, a point of its relative interior.
pub fn interior_point(gens: &[IntVec], rank: usize) -> RatVec {
    let mut p = vec![rat(0, 1); rank];
    for g in gens {
        for (pi, x) in p.iter_mut().zip(g) {
            *pi += rat_from_int(x);
        }
    }
    p
}
