//! Face-lattice combinatorics of simplicial fans: primitive collections, the
//! orbit poset and intersections of orbit closures.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ConeRef, Fan};

/// Minimal non-faces of the simplicial complex `{σ(1) : σ ∈ Σ}`.
///
/// Candidates of size `k` are the sets all of whose `(k-1)`-subsets are
/// faces; the non-faces among them are exactly the primitive collections.
pub fn primitive_collections(f: &Fan) -> Vec<ConeRef> {
    let faces: BTreeSet<ConeRef> = f.all_cones().into_iter().collect();
    let max_dim = f.max_cones().iter().map(ConeRef::dim).max().unwrap_or(0);
    let mut out = Vec::new();
    let mut layer: Vec<ConeRef> = faces.iter().filter(|c| c.is_zero()).cloned().collect();
    for _size in 1..=max_dim + 1 {
        let mut next = BTreeSet::new();
        for base in &layer {
            let start = base.indices().last().map_or(0, |l| l + 1);
            for r in start..f.num_rays() {
                let cand = ConeRef::new(base.indices().iter().copied().chain([r]));
                let boundary_ok = cand.indices().iter().all(|&x| faces.contains(&cand.without(x)));
                if boundary_ok {
                    next.insert(cand);
                }
            }
        }
        let (face, nonface): (Vec<ConeRef>, Vec<ConeRef>) = next.into_iter().partition(|c| faces.contains(c));
        out.extend(nonface);
        layer = face;
        if layer.is_empty() {
            break;
        }
    }
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    out
}

/// Cones of the fan ordered by inclusion. The orbit `O(σ)` has dimension
/// `rank - dim σ` and `V(τ)` is the union of the orbits of the cones above
/// `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoset {
    pub rank: usize,
    pub cones: Vec<ConeRef>,
    /// `(i, j)` when `cones[i]` is a facet of `cones[j]`.
    pub covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    pub fn orbit_dim(&self, i: usize) -> usize {
        self.rank - self.cones[i].dim()
    }

    /// Number of cones of each dimension `0..=rank`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut v = alloc::vec![0; self.rank + 1];
        for c in &self.cones {
            v[c.dim()] += 1;
        }
        v
    }

    /// Cones `σ ⪰ τ`, whose orbits make up `V(τ)`.
    pub fn closure(&self, tau: &ConeRef) -> Vec<&ConeRef> {
        self.cones.iter().filter(|c| tau.is_face_of(c)).collect()
    }
}

pub fn orbit_poset(f: &Fan) -> OrbitPoset {
    let cones = f.all_cones();
    let mut covers = Vec::new();
    for (j, big) in cones.iter().enumerate() {
        for &r in big.indices() {
            let small = big.without(r);
            let i = cones
                .binary_search_by(|c| c.dim().cmp(&small.dim()).then_with(|| c.cmp(&small)))
                .expect("faces of cones are cones");
            covers.push((i, j));
        }
    }
    covers.sort();
    OrbitPoset {
        rank: f.rank(),
        cones,
        covers,
    }
}

/// Cones containing both `a` and `b`: `V(a) ∩ V(b)` is the union of their
/// orbits, and is empty when the list is.
pub fn closure_intersection(f: &Fan, a: &ConeRef, b: &ConeRef) -> Vec<ConeRef> {
    closure_intersection_all(f, &[a.clone(), b.clone()])
}

pub fn closure_intersection_all(f: &Fan, cones: &[ConeRef]) -> Vec<ConeRef> {
    let joined = cones.iter().fold(ConeRef::zero(), |acc, c| acc.union(c));
    f.all_cones().into_iter().filter(|c| joined.is_face_of(c)).collect()
}
