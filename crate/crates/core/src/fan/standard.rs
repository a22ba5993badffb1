//! Small reference fans: affine and projective spaces and products.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Fan;
use crate::linalg::{Int, IntVec};

fn unit(n: usize, i: usize) -> IntVec {
    (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect()
}

/// Fan of `ℂⁿ`: the positive orthant as a single cone.
pub fn affine_space(n: usize) -> Fan {
    let rays = (0..n).map(|i| unit(n, i)).collect();
    Fan::new(n, rays, alloc::vec![(0..n).collect()]).expect("orthant is a fan")
}

/// Fan of `ℙⁿ` with rays `e₁, …, eₙ, -e₁-…-eₙ`.
pub fn projective_space(n: usize) -> Fan {
    let mut rays: Vec<IntVec> = (0..n).map(|i| unit(n, i)).collect();
    rays.push((0..n).map(|_| -Int::one()).collect());
    let cones = (0..=n).map(|skip| (0..=n).filter(|&r| r != skip).collect()).collect();
    Fan::new(n, rays, cones).expect("projective space is a fan")
}

/// Product fan in `N₁ ⊕ N₂`; rays of `a` come first.
pub fn product(a: &Fan, b: &Fan) -> Fan {
    let n = a.rank() + b.rank();
    let mut rays: Vec<IntVec> = Vec::new();
    for r in a.rays() {
        let mut v = r.clone();
        v.extend((0..b.rank()).map(|_| Int::zero()));
        rays.push(v);
    }
    for r in b.rays() {
        let mut v: IntVec = (0..a.rank()).map(|_| Int::zero()).collect();
        v.extend(r.iter().cloned());
        rays.push(v);
    }
    let off = a.num_rays();
    let mut cones = Vec::new();
    for ca in a.max_cones() {
        for cb in b.max_cones() {
            let mut c: Vec<usize> = ca.indices().to_vec();
            c.extend(cb.indices().iter().map(|i| i + off));
            cones.push(c);
        }
    }
    Fan::new(n, rays, cones).expect("product of fans is a fan")
}
