//! Projectivity of complete simplicial fans.
//!
//! A complete fan is projective exactly when it carries a strictly convex
//! support function: a choice of linear functional `uᵢ` per maximal cone such
//! that neighbouring functionals agree on their common wall and the jump across
//! every wall is strictly positive. Since the conditions are homogeneous, the
//! strict jumps may be normalised to `>= 1`, giving a rational linear system.
//! The verdict always carries evidence that has been re-checked: either the
//! functionals themselves or a Farkas certificate for the system.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::additive::{build_family_fan, FamilyFan};
use crate::fan::{ConeRef, Fan};
use crate::linalg::{pair, rat_from_int, solve_rat, to_rat_vec, Rat, RatVec};
use crate::lp::{feasible, verify_farkas, FarkasCertificate, Feasibility, LinearSystem};
use crate::ProjectivityError;

/// One linear functional per maximal cone, in the fan's cone order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFunction {
    pub functionals: Vec<RatVec>,
}

impl SupportFunction {
    /// Checks wall agreement and a strictly positive jump across every wall,
    /// in both directions.
    pub fn is_strictly_convex_on(&self, f: &Fan) -> bool {
        if self.functionals.len() != f.max_cones().len() || self.functionals.iter().any(|u| u.len() != f.rank()) {
            return false;
        }
        f.walls().iter().all(|w| {
            let [i, j] = w.incident[..] else { return false };
            let (ui, uj) = (&self.functionals[i], &self.functionals[j]);
            let agree = w
                .shared
                .indices()
                .iter()
                .all(|&r| pair(ui, f.ray(r)) == pair(uj, f.ray(r)));
            let vj = off_wall_ray(f, j, &w.shared);
            let vi = off_wall_ray(f, i, &w.shared);
            agree
                && (pair(ui, f.ray(vj)) - pair(uj, f.ray(vj))).is_positive()
                && (pair(uj, f.ray(vi)) - pair(ui, f.ray(vi))).is_positive()
        })
    }

    /// `min_k ⟨u_k, v⟩`; for a strictly convex function this equals the
    /// functional of any cone containing `v`.
    pub fn min_value(&self, v: &[Rat]) -> Rat {
        self.functionals
            .iter()
            .map(|u| u.iter().zip(v).map(|(a, b)| a * b).fold(Rat::zero(), |s, t| s + t))
            .min()
            .unwrap_or_else(Rat::zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectivityVerdict {
    Projective(SupportFunction),
    NonProjective {
        system: LinearSystem,
        certificate: FarkasCertificate,
    },
}

impl ProjectivityVerdict {
    pub fn is_projective(&self) -> bool {
        matches!(self, ProjectivityVerdict::Projective(_))
    }
}

fn off_wall_ray(f: &Fan, cone: usize, wall: &ConeRef) -> usize {
    *f.max_cones()[cone]
        .indices()
        .iter()
        .find(|r| !wall.contains_ray(**r))
        .expect("a wall misses exactly one ray of each incident cone")
}

/// The support-function system of a complete fan.
///
/// Cone `i` owns variables `i·n .. i·n+n`. Every wall between cones `i < j`
/// contributes `⟨uᵢ - uⱼ, w⟩ = 0` for each of its generators `w` and
/// `⟨uᵢ - uⱼ, v⟩ >= 1` for the ray `v` of `σⱼ` off the wall.
pub fn build_support_system(f: &Fan) -> Result<LinearSystem, ProjectivityError> {
    if !f.is_complete() {
        return Err(ProjectivityError::NotComplete);
    }
    let n = f.rank();
    let mut sys = LinearSystem::new(n * f.max_cones().len());
    let width = sys.num_vars;
    let row = |i: usize, j: usize, v: &[crate::Int]| -> RatVec {
        let mut coeffs = vec![Rat::zero(); width];
        for (k, x) in v.iter().enumerate() {
            let x = rat_from_int(x);
            coeffs[i * n + k] = x.clone();
            coeffs[j * n + k] = -x;
        }
        coeffs
    };
    for w in f.walls() {
        let [i, j] = w.incident[..] else {
            return Err(ProjectivityError::NotComplete);
        };
        for &r in w.shared.indices() {
            sys.add_eq(row(i, j, f.ray(r)), Rat::zero());
        }
        let v = off_wall_ray(f, j, &w.shared);
        sys.add_ge(row(i, j, f.ray(v)), Rat::one());
    }
    Ok(sys)
}

/// Decides projectivity, re-verifying whichever evidence the solver returns.
pub fn is_projective(f: &Fan) -> Result<ProjectivityVerdict, ProjectivityError> {
    let system = build_support_system(f)?;
    match feasible(&system).expect("system is well formed") {
        Feasibility::Feasible(x) => {
            let sf = SupportFunction {
                functionals: x.chunks(f.rank()).map(<[Rat]>::to_vec).collect(),
            };
            if !sf.is_strictly_convex_on(f) {
                return Err(ProjectivityError::Unverified("support function"));
            }
            Ok(ProjectivityVerdict::Projective(sf))
        }
        Feasibility::Infeasible(certificate) => {
            if !verify_farkas(&system, &certificate).unwrap_or(false) {
                return Err(ProjectivityError::Unverified("Farkas certificate"));
            }
            Ok(ProjectivityVerdict::NonProjective { system, certificate })
        }
    }
}

/// One link of the cyclic chain for `Σₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub i: usize,
    /// Maximal cone containing `aᵢ, b_{i-1}, a_{i-1}`.
    pub cone: ConeRef,
    /// The cone across the wall `cone ∖ {a_{i-1}}`, which contains `bᵢ`.
    pub neighbour: ConeRef,
    /// Coordinates of `bᵢ` in the generators of `cone` (some are negative).
    pub coordinates: RatVec,
    /// `φ(aᵢ) + φ(b_{i-1}) - φ(a_{i-1}) > φ(bᵢ)`
    pub inequality: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCertificate {
    pub n: usize,
    pub steps: Vec<ChainStep>,
    /// The summed chain, which reads `x > x`.
    pub sum: String,
    /// The chain turned into multipliers for [`build_support_system`]; only
    /// available when the cones form a complete fan.
    pub farkas: Option<(LinearSystem, FarkasCertificate)>,
}

fn construction(msg: String) -> ProjectivityError {
    ProjectivityError::Construction(msg)
}

/// Replays the hand-made non-projectivity argument for `Σₙ`.
///
/// For each `i` (cyclically, `a₀`/`b₀` standing for `aₙ`/`bₙ` when `i = 1`)
/// the identity `aᵢ + b_{i-1} - a_{i-1} = bᵢ` is checked, a maximal cone
/// `ω ⊇ {aᵢ, b_{i-1}, a_{i-1}}` is located whose neighbour across
/// `ω ∖ {a_{i-1}}` is reached through `bᵢ`, and `bᵢ ∉ ω` is confirmed. A
/// strictly convex `φ` would then satisfy
/// `φ(aᵢ) + φ(b_{i-1}) - φ(a_{i-1}) > φ(bᵢ)` for every `i`, and the `a`-terms
/// cancel in the sum. When the cones form a complete fan the chain is also
/// turned into a Farkas certificate for the support-function system and
/// checked by [`verify_farkas`].
pub fn verify_cyclic_certificate(n: usize) -> Result<CyclicCertificate, ProjectivityError> {
    if n < 3 {
        return Err(construction(format!("n must be at least 3, got {n}")));
    }
    let s = build_family_fan(n).map_err(|e| construction(format!("{e}")))?;
    let f = &s.fan;

    let mut steps = Vec::with_capacity(n);
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        let (ai, bp, ap, bi) = (s.a(i), s.b(prev), s.a(prev), s.b(i));
        for k in 0..n {
            let lhs = &f.ray(ai)[k] + &f.ray(bp)[k] - &f.ray(ap)[k];
            if lhs != f.ray(bi)[k] {
                return Err(construction(format!("a{i} + b{prev} - a{prev} != b{i}")));
            }
        }
        let triple = ConeRef::new([ai, bp, ap]);
        let (cone, neighbour) = find_link(&s, &triple, ap, bi)
            .ok_or_else(|| construction(format!("no cone links {{a{i}, b{prev}, a{prev}}} to b{i}")))?;
        let coordinates = f
            .cone_coordinates(&cone, &to_rat_vec(f.ray(bi)))
            .ok_or_else(|| construction(format!("b{i} is not in the span of {}", s.cone_label(&cone))))?;
        if !coordinates.iter().any(Signed::is_negative) {
            return Err(construction(format!("b{i} lies in {}", s.cone_label(&cone))));
        }
        steps.push(ChainStep {
            i,
            cone,
            neighbour,
            coordinates,
            inequality: format!(
                "φ({}) + φ({}) - φ({}) > φ({})",
                s.label(ai),
                s.label(bp),
                s.label(ap),
                s.label(bi)
            ),
        });
    }

    let farkas = if f.is_complete() {
        Some(chain_to_farkas(f, &steps)?)
    } else {
        None
    };
    let bs: Vec<String> = (1..=n).map(|i| format!("φ(b{i})")).collect();
    let side = bs.join(" + ");
    Ok(CyclicCertificate {
        n,
        steps,
        sum: format!("{side} > {side}"),
        farkas,
    })
}

/// Puts multiplier one on the wall inequality of every chain step and solves
/// `Eᵀ y = -Aᵀ z` for the equality multipliers.
fn chain_to_farkas(f: &Fan, steps: &[ChainStep]) -> Result<(LinearSystem, FarkasCertificate), ProjectivityError> {
    let system = build_support_system(f)?;
    let walls = f.walls();
    let mut z = vec![Rat::zero(); system.inequalities.len()];
    for step in steps {
        let wall = step.cone.intersection(&step.neighbour);
        let w = walls
            .iter()
            .position(|w| w.shared == wall)
            .ok_or_else(|| construction(format!("{wall:?} is not a wall")))?;
        // one inequality per wall, in wall order
        z[w] = Rat::one();
    }
    let m = system.num_vars;
    let target: RatVec = (0..m)
        .map(|v| {
            -system
                .inequalities
                .iter()
                .zip(&z)
                .filter(|(_, zk)| !zk.is_zero())
                .map(|(c, zk)| zk * &c.coeffs[v])
                .fold(Rat::zero(), |a, b| a + b)
        })
        .collect();
    let et: Vec<RatVec> = (0..m)
        .map(|v| system.equalities.iter().map(|c| c.coeffs[v].clone()).collect())
        .collect();
    let y = solve_rat(&et, system.equalities.len(), &target)
        .ok_or_else(|| construction("wall equalities do not close the chain".into()))?;
    let certificate = FarkasCertificate {
        eq_multipliers: y,
        ineq_multipliers: z,
    };
    if !verify_farkas(&system, &certificate).unwrap_or(false) {
        return Err(construction("chain multipliers are not a Farkas certificate".into()));
    }
    Ok((system, certificate))
}

/// A maximal cone `ω ⊇ triple` such that swapping `drop` for `add` gives
/// another maximal cone.
fn find_link(s: &FamilyFan, triple: &ConeRef, drop: usize, add: usize) -> Option<(ConeRef, ConeRef)> {
    let f = &s.fan;
    f.max_cones().iter().find_map(|omega| {
        if !triple.is_face_of(omega) {
            return None;
        }
        let other = omega.without(drop).union(&ConeRef::new([add]));
        f.max_cone_index(&other).map(|_| (omega.clone(), other))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard::{product, projective_space};
    use crate::linalg::rat_vec;

    #[test]
    fn projective_plane_system_shape() {
        let sys = build_support_system(&projective_space(2)).unwrap();
        assert_eq!(sys.num_vars, 6);
        assert_eq!(sys.equalities.len(), 3);
        assert_eq!(sys.inequalities.len(), 3);
        assert!(is_projective(&projective_space(2)).unwrap().is_projective());
    }

    #[test]
    fn projective_line_has_no_equalities() {
        let sys = build_support_system(&projective_space(1)).unwrap();
        assert_eq!(sys.num_vars, 2);
        assert!(sys.equalities.is_empty());
        assert_eq!(sys.inequalities.len(), 1);
        assert!(is_projective(&projective_space(1)).unwrap().is_projective());
    }

    #[test]
    fn sigma3_system_shape() {
        let s = build_family_fan(3).unwrap();
        let sys = build_support_system(&s.fan).unwrap();
        assert_eq!(sys.num_vars, 30);
        assert_eq!(sys.equalities.len(), 30);
        assert_eq!(sys.inequalities.len(), 15);
    }

    #[test]
    fn sigma3_is_not_projective() {
        let s = build_family_fan(3).unwrap();
        match is_projective(&s.fan).unwrap() {
            ProjectivityVerdict::NonProjective { system, certificate } => {
                assert!(verify_farkas(&system, &certificate).unwrap());
            }
            ProjectivityVerdict::Projective(_) => panic!("Σ₃ reported projective"),
        }
    }

    #[test]
    fn cube_fan_is_projective() {
        let p1 = projective_space(1);
        let f = product(&product(&p1, &p1), &p1);
        let ProjectivityVerdict::Projective(sf) = is_projective(&f).unwrap() else {
            panic!("(P¹)³ reported non-projective");
        };
        assert!(sf.is_strictly_convex_on(&f));
        // φ agrees with the functional of the cone containing the point
        let v = rat_vec(&[2, -1, 3]);
        let home = f.max_cones().iter().position(|c| f.cone_contains(c, &v)).unwrap();
        let own: Rat = sf.functionals[home].iter().zip(&v).map(|(a, b)| a * b).sum();
        assert_eq!(sf.min_value(&v), own);
    }

    #[test]
    fn incomplete_fan_rejected() {
        let f = crate::fan::standard::affine_space(2);
        assert_eq!(build_support_system(&f), Err(ProjectivityError::NotComplete));
    }

    #[test]
    fn cyclic_certificate_for_sigma3() {
        let c = verify_cyclic_certificate(3).unwrap();
        assert_eq!(c.steps.len(), 3);
        assert_eq!(c.steps[0].inequality, "φ(a1) + φ(b3) - φ(a3) > φ(b1)");
        assert_eq!(c.steps[0].cone, ConeRef::new([3, 4, 6]));
        assert_eq!(c.steps[0].neighbour, ConeRef::new([1, 3, 4]));
        // b1 = a1 + b3 - a3 in the generators (b3, a1, a3)
        assert_eq!(c.steps[0].coordinates, rat_vec(&[1, 1, -1]));
        assert_eq!(c.sum, "φ(b1) + φ(b2) + φ(b3) > φ(b1) + φ(b2) + φ(b3)");
        let (system, cert) = c.farkas.unwrap();
        assert!(verify_farkas(&system, &cert).unwrap());
        assert_eq!(cert.ineq_multipliers.iter().filter(|z| !z.is_zero()).count(), 3);
    }

    #[test]
    fn cyclic_certificate_up_to_six() {
        for n in 3..=6 {
            let c = verify_cyclic_certificate(n).unwrap();
            assert_eq!(c.steps.len(), n);
        }
        assert!(verify_cyclic_certificate(2).is_err());
    }
}
