//! The fans `Σₙ` and their additive group action.
//!
//! `Σₙ` has rays `a₁ … aₙ` (the standard basis), `b₀ = -a₁-…-aₙ` and
//! `bᵢ = b₀ + aᵢ`. Its maximal cones are the positive orthant together with a
//! subdivision of the remaining `n` facets of the simplex `conv(a₀, a₁ … aₙ)`
//! (`a₀ = b₀`) into `n` cones each. For `n = 3` the result is a smooth
//! complete fan without a strictly convex support function. For `n >= 4` the
//! cyclic subdivision rule does not glue along shared 2-faces, so the cone
//! collection is smooth but not a fan; it is still built so that callers can
//! inspect it.
//!
//! Rays are stored in the order `b₀, b₁ … bₙ, a₁ … aₙ`, which is also the
//! coordinate order on the Cox space: `(x₀, x₁ … xₙ, x'₁ … x'ₙ)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::cox::{
    chart_transition, in_y, lift, points_equal, quasitorus, quotient_map, quotient_map_in, zero_support, ChartPoint,
    QuasitorusData,
};
use crate::fan::{closure_intersection_all, fan_isomorphic, star_fan, verify_isomorphism, ConeRef, Fan, StarFan};
use crate::linalg::{det, int_vec, rank_rat, rat, rat_from_int, Int, IntMat, IntVec, Rat, RatVec};
use crate::{CoxError, FamilyError};

/// `Σₙ` with helpers to address its rays by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFan {
    pub n: usize,
    pub fan: Fan,
}

impl FamilyFan {
    /// Ray index of `bᵢ`, `0 <= i <= n`.
    pub fn b(&self, i: usize) -> usize {
        assert!(i <= self.n, "b index {i} out of range");
        i
    }

    /// Ray index of `aⱼ`, `1 <= j <= n`; `a₀` is `b₀`.
    pub fn a(&self, j: usize) -> usize {
        assert!(j <= self.n, "a index {j} out of range");
        if j == 0 {
            0
        } else {
            self.n + j
        }
    }

    pub fn label(&self, ray: usize) -> String {
        ray_label(self.n, ray)
    }

    pub fn cone(&self, rays: impl IntoIterator<Item = usize>) -> ConeRef {
        ConeRef::new(rays)
    }

    pub fn cone_label(&self, cone: &ConeRef) -> String {
        let parts: Vec<String> = cone.indices().iter().map(|&r| self.label(r)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

pub fn ray_label(n: usize, ray: usize) -> String {
    if ray <= n {
        format!("b{ray}")
    } else {
        format!("a{}", ray - n)
    }
}

/// Builds `Σₙ` for `n >= 3`.
///
/// For each `i` let `c = (i+1, …, i+n-1)` read cyclically in `1..=n`. The
/// facet opposite `aᵢ` is cut into the cones on
/// `{a_{c_j} … a_{c_{n-1}}, b_{c_1} … b_{c_j}}` for `j = 1 … n-1` and
/// `{b_{c_1} … b_{c_{n-1}}, b₀}`.
///
/// Only structural checks are run; see the module docs for why
/// [`Fan::validate`] fails once `n >= 4`.
pub fn build_family_fan(n: usize) -> Result<FamilyFan, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall(n));
    }
    let a = |j: usize| n + j;
    let b = |i: usize| i;
    let mut rays: Vec<IntVec> = Vec::with_capacity(2 * n + 1);
    rays.push((0..n).map(|_| -Int::one()).collect());
    for i in 1..=n {
        rays.push(
            (1..=n)
                .map(|k| if k == i { Int::zero() } else { -Int::one() })
                .collect(),
        );
    }
    for j in 1..=n {
        rays.push((1..=n).map(|k| if k == j { Int::one() } else { Int::zero() }).collect());
    }

    let mut cones: Vec<Vec<usize>> = alloc::vec![(1..=n).map(a).collect()];
    for i in 1..=n {
        let c: Vec<usize> = (1..n).map(|m| (i + m - 1) % n + 1).collect();
        for j in 1..n {
            let mut cone: Vec<usize> = c[j - 1..].iter().map(|&k| a(k)).collect();
            cone.extend(c[..j].iter().map(|&k| b(k)));
            cones.push(cone);
        }
        let mut last: Vec<usize> = c.iter().map(|&k| b(k)).collect();
        last.push(b(0));
        cones.push(last);
    }
    let fan = Fan::new(n, rays, cones)?;
    Ok(FamilyFan { n, fan })
}

fn check_params(fam: &FamilyFan, c: &[Rat]) -> Result<(), FamilyError> {
    if c.len() != fam.n {
        return Err(FamilyError::ParamLength {
            expected: fam.n,
            found: c.len(),
        });
    }
    Ok(())
}

fn check_point(fam: &FamilyFan, y: &[Rat]) -> Result<(), FamilyError> {
    if !in_y(&fam.fan, y)? {
        return Err(CoxError::InIrrelevantLocus(zero_support(y).indices().to_vec()).into());
    }
    Ok(())
}

/// `x₀ x₁ … x̂ⱼ … xₙ`, the monomial driving the `j`-th additive parameter.
pub fn monomial(fam: &FamilyFan, y: &[Rat], j: usize) -> Rat {
    (0..=fam.n)
        .filter(|&i| i != j)
        .fold(Rat::one(), |acc, i| acc * &y[fam.b(i)])
}

/// The additive action upstairs: `xᵢ` fixed, `x'ⱼ ↦ x'ⱼ + cⱼ·x₀…x̂ⱼ…xₙ`.
pub fn additive_act(fam: &FamilyFan, c: &[Rat], y: &[Rat]) -> Result<RatVec, FamilyError> {
    check_params(fam, c)?;
    check_point(fam, y)?;
    let mut out = y.to_vec();
    for j in 1..=fam.n {
        if !c[j - 1].is_zero() {
            out[fam.a(j)] += &c[j - 1] * monomial(fam, y, j);
        }
    }
    // Only a-coordinates move, and a zero b-coordinate freezes every
    // parameter whose monomial it enters; the result must stay off Z(Σ).
    if !in_y(&fam.fan, &out)? {
        return Err(FamilyError::Check(
            "action left the complement of the irrelevant locus".into(),
        ));
    }
    Ok(out)
}

/// The induced action on `X`, reported in the chart of `x` when that chart
/// still contains the image. An `a`-coordinate can cancel to zero, in which
/// case the canonical chart of the image is used.
pub fn additive_act_x(fam: &FamilyFan, c: &[Rat], x: &ChartPoint) -> Result<ChartPoint, FamilyError> {
    let y = lift(&fam.fan, x)?;
    let moved = additive_act(fam, c, &y)?;
    let zeros = zero_support(&moved);
    if zeros.indices().iter().all(|r| x.cone.contains_ray(*r)) {
        Ok(quotient_map_in(&fam.fan, &moved, &x.cone)?)
    } else {
        Ok(quotient_map(&fam.fan, &moved)?)
    }
}

/// Exponent vector of `x'ⱼ` minus that of a monomial, paired against every
/// row of the kernel basis. Zero everywhere means the two have the same
/// `G`-character.
fn character_defect(q: &QuasitorusData, coordinate: usize, monomial: &[Int]) -> Vec<Int> {
    (0..q.kernel_basis.rows())
        .map(|k| {
            let row = q.kernel_basis.row(k);
            let m: Int = row.iter().zip(monomial).map(|(a, b)| a * b).sum();
            &row[coordinate] - m
        })
        .collect()
}

/// Whether each `x'ⱼ` has the same `G`-character as the given monomial
/// exponent vector (`monomials[j-1]`, indexed by rays).
pub fn check_equivariance_with(fam: &FamilyFan, monomials: &[IntVec]) -> Result<bool, FamilyError> {
    check_params(fam, &alloc::vec![Rat::zero(); monomials.len()])?;
    let q = quasitorus(&fam.fan)?;
    Ok((1..=fam.n).all(|j| {
        character_defect(&q, fam.a(j), &monomials[j - 1])
            .iter()
            .all(Zero::is_zero)
    }))
}

/// Exponent vectors of `x₀ x₁ … x̂ⱼ … xₙ`.
pub fn action_monomials(fam: &FamilyFan) -> Vec<IntVec> {
    (1..=fam.n)
        .map(|j| {
            (0..fam.fan.num_rays())
                .map(|r| if r <= fam.n && r != j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect()
}

/// The action commutes with `G_Σ`.
pub fn check_equivariance(fam: &FamilyFan) -> Result<bool, FamilyError> {
    check_equivariance_with(fam, &action_monomials(fam))
}

/// The character relations `ω'ⱼ = ω₀ + Σ_{k≠j} ω_k`, each listed only after
/// it has been confirmed against the kernel basis.
pub fn character_relations(fam: &FamilyFan) -> Result<Vec<String>, FamilyError> {
    let q = quasitorus(&fam.fan)?;
    let mons = action_monomials(fam);
    let mut out = Vec::new();
    for j in 1..=fam.n {
        if !character_defect(&q, fam.a(j), &mons[j - 1]).iter().all(Zero::is_zero) {
            return Err(FamilyError::Check(format!(
                "character of x'{j} differs from its monomial"
            )));
        }
        let rhs: Vec<String> = (0..=fam.n).filter(|&i| i != j).map(|i| format!("ω{i}")).collect();
        out.push(format!("ω'{j} = {}", rhs.join(" + ")));
    }
    Ok(out)
}

/// Rescaled parameters for conjugation by a diagonal torus element `t` of
/// `(ℂ^×)^{Σ(1)}`: `t · act(c) · t⁻¹ = act(c')` with
/// `c'ⱼ = cⱼ · t_{aⱼ} / ∏_{i≠j} t_{bᵢ}`.
pub fn torus_rescale(fam: &FamilyFan, c: &[Rat], t: &[Rat]) -> Result<RatVec, FamilyError> {
    check_params(fam, c)?;
    if t.len() != fam.fan.num_rays() {
        return Err(CoxError::PointLength {
            expected: fam.fan.num_rays(),
            found: t.len(),
        }
        .into());
    }
    if let Some(k) = t.iter().position(Zero::is_zero) {
        return Err(CoxError::ZeroParameter(k).into());
    }
    Ok((1..=fam.n)
        .map(|j| &c[j - 1] * &t[fam.a(j)] / monomial(fam, t, j))
        .collect())
}

/// The maximal cone spanned by `a₁ … aₙ`; its chart is the open orbit's
/// affine space.
pub fn base_cone(fam: &FamilyFan) -> ConeRef {
    ConeRef::new((1..=fam.n).map(|j| fam.a(j)))
}

/// The point `π(1, …, 1, 0, …, 0)` whose orbit is open.
pub fn base_point(fam: &FamilyFan) -> ChartPoint {
    ChartPoint::origin(base_cone(fam))
}

/// Parameters `c` with `c · base_point = x`, when `x` lies in the open
/// orbit (all of `x₀ … xₙ` nonzero); `None` otherwise.
pub fn open_orbit_params(fam: &FamilyFan, x: &ChartPoint) -> Result<Option<RatVec>, FamilyError> {
    match chart_transition(&fam.fan, x, &base_cone(fam)) {
        Ok(p) => Ok(Some(p.coords)),
        Err(CoxError::NotInChart(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Dimension of the `𝔾ₐⁿ`-orbit of `π(y)` from tangent ranks upstairs:
/// `rank(V ∪ W) - rank(W)` with `vⱼ = mⱼ(y)·e_{aⱼ}` and `w_k = K_k ⊙ y`.
pub fn orbit_dimension_at(fam: &FamilyFan, y: &[Rat]) -> Result<usize, FamilyError> {
    check_point(fam, y)?;
    let q = quasitorus(&fam.fan)?;
    let w: Vec<RatVec> = (0..q.dim())
        .map(|k| {
            q.kernel_basis
                .row(k)
                .iter()
                .zip(y)
                .map(|(e, v)| rat_from_int(e) * v)
                .collect()
        })
        .collect();
    let mut all = w.clone();
    for j in 1..=fam.n {
        let mut v = alloc::vec![Rat::zero(); y.len()];
        v[fam.a(j)] = monomial(fam, y, j);
        all.push(v);
    }
    Ok(rank_rat(&all) - rank_rat(&w))
}

pub fn orbit_dimension(fam: &FamilyFan, x: &ChartPoint) -> Result<usize, FamilyError> {
    orbit_dimension_at(fam, &lift(&fam.fan, x)?)
}

fn only_three(fam: &FamilyFan) -> Result<(), FamilyError> {
    if fam.n != 3 {
        return Err(FamilyError::OnlyRankThree(fam.n));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceSurface {
    /// Rays `(1,0), (0,1), (-1,-1)`.
    ProjectivePlane,
    /// Rays `(0,1), (-1,0), (-1,-1), (0,-1), (1,-1)`, cyclically adjacent:
    /// `𝔽₁` blown up at a torus-fixed point.
    BlownUpF1,
}

impl ReferenceSurface {
    pub fn fan(self) -> Fan {
        match self {
            ReferenceSurface::ProjectivePlane => crate::fan::standard::projective_space(2),
            ReferenceSurface::BlownUpF1 => {
                let rays: Vec<IntVec> = [[0, 1], [-1, 0], [-1, -1], [0, -1], [1, -1]]
                    .iter()
                    .map(|r| int_vec(r))
                    .collect();
                let cones = (0..5).map(|i| alloc::vec![i, (i + 1) % 5]).collect();
                Fan::new(2, rays, cones).expect("reference fan")
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReferenceSurface::ProjectivePlane => "P2",
            ReferenceSurface::BlownUpF1 => "Bl(F1)",
        }
    }
}

/// Identification of one component `Xᵢ = V(bᵢ)` of the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCheck {
    pub i: usize,
    pub star: StarFan,
    pub reference: ReferenceSurface,
    /// Unimodular map taking the star fan onto the reference fan.
    pub witness: IntMat,
}

/// Star fans of `b₀ … b₃` in `Σ₃`, matched against the reference surfaces.
/// Every witness is re-checked on rays and cones, and the star fans of
/// `b₁, b₂, b₃` are also matched pairwise.
pub fn component_star_check(fam: &FamilyFan) -> Result<Vec<StarCheck>, FamilyError> {
    only_three(fam)?;
    let mut out = Vec::new();
    for i in 0..=3 {
        let star = star_fan(&fam.fan, &ConeRef::new([fam.b(i)]))?;
        let reference = if i == 0 {
            ReferenceSurface::ProjectivePlane
        } else {
            ReferenceSurface::BlownUpF1
        };
        let target = reference.fan();
        let witness = fan_isomorphic(&star.fan, &target)?
            .ok_or_else(|| FamilyError::Check(format!("V(b{i}) is not {}", reference.name())))?;
        let unimodular = det(&witness).is_ok_and(|d| d.abs().is_one());
        if !unimodular || !verify_isomorphism(&witness, &star.fan, &target) {
            return Err(FamilyError::Check(format!("witness for V(b{i}) does not verify")));
        }
        out.push(StarCheck {
            i,
            star,
            reference,
            witness,
        });
    }
    for (p, q) in [(1, 2), (1, 3), (2, 3)] {
        let m = fan_isomorphic(&out[p].star.fan, &out[q].star.fan)?
            .ok_or_else(|| FamilyError::Check(format!("V(b{p}) and V(b{q}) differ")))?;
        if !verify_isomorphism(&m, &out[p].star.fan, &out[q].star.fan) {
            return Err(FamilyError::Check(format!(
                "witness V(b{p}) -> V(b{q}) does not verify"
            )));
        }
    }
    Ok(out)
}

/// Intersection of orbit closures as reported by the cone lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meeting {
    pub what: String,
    /// Cones whose orbits make up the intersection.
    pub cones: Vec<ConeRef>,
    /// Number of points when the intersection is finite.
    pub points: Option<usize>,
}

fn meeting(f: &Fan, what: String, closures: &[ConeRef]) -> Meeting {
    let cones = closure_intersection_all(f, closures);
    let points = cones.iter().all(|c| c.dim() == f.rank()).then_some(cones.len());
    Meeting { what, cones, points }
}

/// A fixed curve `S_jk = V(bⱼ, b_k)` of the component `Xⱼ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub j: usize,
    pub k: usize,
    pub cone: ConeRef,
    /// Chart points sampled on the curve, all with orbit dimension 0.
    pub fixed_samples: usize,
}

/// A point upstairs representing the meeting point of two curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub what: String,
    pub y: RatVec,
    pub point: ChartPoint,
}

/// Orbit structure of the additive action on `X_{Σ₃}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// `(i, reference surface)` for the components `Xᵢ = V(bᵢ)`.
    pub components: Vec<(usize, ReferenceSurface)>,
    pub base_orbit_dim: usize,
    /// Points of `X₀` checked to be fixed.
    pub x0_fixed_samples: usize,
    /// `(j, dim)` at a generic point of `Xⱼ`.
    pub generic_orbit_dims: Vec<(usize, usize)>,
    pub curves: Vec<Curve>,
    /// Pairwise meetings of the curves inside each `Xⱼ`.
    pub curve_meetings: Vec<Meeting>,
    pub representatives: Vec<Representative>,
    /// Meetings of components: pairs, the triple `X₁X₂X₃` and the triples
    /// through `X₀`.
    pub component_meetings: Vec<Meeting>,
    /// The three points `X₀ ∩ Xⱼ ∩ X_l`, pairwise distinct in `X`.
    pub triple_points: Vec<ChartPoint>,
}

/// Points of `Y` with prescribed zeros and small distinct nonzero values
/// elsewhere, one per offset.
fn samples_with_zeros(fam: &FamilyFan, zeros: &ConeRef, count: usize) -> Vec<RatVec> {
    (0..count)
        .map(|s| {
            (0..fam.fan.num_rays())
                .map(|r| {
                    if zeros.contains_ray(r) {
                        Rat::zero()
                    } else {
                        // alternate signs and vary denominators
                        let num = (r + 2 + 3 * s) as i64 * if (r + s) % 2 == 0 { 1 } else { -1 };
                        rat(num, (s % 3 + 1) as i64)
                    }
                })
                .collect()
        })
        .collect()
}

fn fixed_on(fam: &FamilyFan, zeros: &ConeRef, count: usize) -> Result<usize, FamilyError> {
    let mut seen = 0;
    for y in samples_with_zeros(fam, zeros, count) {
        if orbit_dimension_at(fam, &y)? != 0 {
            return Err(FamilyError::Check(format!(
                "point with zeros {} is not fixed",
                fam.cone_label(zeros)
            )));
        }
        seen += 1;
    }
    Ok(seen)
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::Check(msg.into()))
    }
}

/// Assembles and checks the orbit structure for `n = 3`. Any claim that
/// fails to hold is reported as [`FamilyError::Check`].
pub fn ga_orbit_report(fam: &FamilyFan) -> Result<OrbitReport, FamilyError> {
    only_three(fam)?;
    let f = &fam.fan;
    let stars = component_star_check(fam)?;
    let components: Vec<(usize, ReferenceSurface)> = stars.iter().map(|s| (s.i, s.reference)).collect();

    let base_orbit_dim = orbit_dimension(fam, &base_point(fam))?;
    expect(base_orbit_dim == 3, "base point orbit is not open")?;

    // X₀: every orbit in V(b₀) is pointwise fixed.
    let mut x0_fixed_samples = 0;
    for tau in f.all_cones().iter().filter(|c| c.contains_ray(fam.b(0))) {
        x0_fixed_samples += fixed_on(fam, tau, 3)?;
    }

    let mut generic_orbit_dims = Vec::new();
    for j in 1..=3 {
        let y = &samples_with_zeros(fam, &ConeRef::new([fam.b(j)]), 1)[0];
        generic_orbit_dims.push((j, orbit_dimension_at(fam, y)?));
    }
    expect(
        generic_orbit_dims.iter().all(|&(_, d)| d == 1),
        "generic orbits in Xj are not curves",
    )?;

    let mut curves = Vec::new();
    let mut curve_meetings = Vec::new();
    let mut representatives = Vec::new();
    for j in 1..=3usize {
        let others: Vec<usize> = (1..=3).filter(|&k| k != j).collect();
        let (k1, k2) = (others[0], others[1]);
        let cone = |k: usize| ConeRef::new([fam.b(j), fam.b(k)]);
        for k in [0, k1, k2] {
            expect(f.is_cone(&cone(k)), format!("S{j}{k} is not a curve"))?;
            let mut fixed_samples = 0;
            for tau in f.all_cones().iter().filter(|c| cone(k).is_face_of(c)) {
                fixed_samples += fixed_on(fam, tau, 2)?;
            }
            curves.push(Curve {
                j,
                k,
                cone: cone(k),
                fixed_samples,
            });
        }
        let m1 = meeting(f, format!("S{j}0 ∩ S{j}{k1}"), &[cone(0), cone(k1)]);
        let m2 = meeting(f, format!("S{j}0 ∩ S{j}{k2}"), &[cone(0), cone(k2)]);
        let m3 = meeting(f, format!("S{j}{k1} ∩ S{j}{k2}"), &[cone(k1), cone(k2)]);
        expect(
            m1.points == Some(1) && m2.points == Some(1),
            format!("curves of X{j} through S{j}0 do not meet once"),
        )?;
        expect(m3.cones.is_empty(), format!("S{j}{k1} and S{j}{k2} meet"))?;
        let p1 = ChartPoint::origin(m1.cones[0].clone());
        let p2 = ChartPoint::origin(m2.cones[0].clone());
        expect(!points_equal(f, &p1, &p2)?, format!("the two points on S{j}0 coincide"))?;
        for (m, k) in [(&m1, k1), (&m2, k2)] {
            let zeros = ConeRef::new([fam.b(0), fam.b(j), fam.b(k)]);
            let y: RatVec = (0..f.num_rays())
                .map(|r| if zeros.contains_ray(r) { Rat::zero() } else { Rat::one() })
                .collect();
            let point = quotient_map(f, &y)?;
            expect(
                points_equal(f, &point, &ChartPoint::origin(m.cones[0].clone()))?,
                format!("representative of {} is off", m.what),
            )?;
            representatives.push(Representative {
                what: m.what.clone(),
                y,
                point,
            });
        }
        curve_meetings.extend([m1, m2, m3]);
    }

    let comp = |i: usize| ConeRef::new([fam.b(i)]);
    let mut component_meetings = Vec::new();
    for (j, l) in [(1, 2), (1, 3), (2, 3)] {
        let m = meeting(f, format!("X{j} ∩ X{l}"), &[comp(j), comp(l)]);
        let s = closure_intersection_all(f, &[ConeRef::new([fam.b(j), fam.b(l)])]);
        expect(m.cones == s, format!("X{j} ∩ X{l} is not S{j}{l}"))?;
        component_meetings.push(m);
    }
    for j in 1..=3 {
        let m = meeting(f, format!("X0 ∩ X{j}"), &[comp(0), comp(j)]);
        let s = closure_intersection_all(f, &[ConeRef::new([fam.b(0), fam.b(j)])]);
        expect(m.cones == s, format!("X0 ∩ X{j} is not S{j}0"))?;
        component_meetings.push(m);
    }
    let empty = meeting(f, "X1 ∩ X2 ∩ X3".into(), &[comp(1), comp(2), comp(3)]);
    expect(empty.cones.is_empty(), "X1, X2, X3 have a common point")?;
    component_meetings.push(empty);
    let mut triple_points = Vec::new();
    for (j, l) in [(1, 2), (1, 3), (2, 3)] {
        let m = meeting(f, format!("X0 ∩ X{j} ∩ X{l}"), &[comp(0), comp(j), comp(l)]);
        expect(m.points == Some(1), format!("X0 ∩ X{j} ∩ X{l} is not a single point"))?;
        triple_points.push(ChartPoint::origin(m.cones[0].clone()));
        component_meetings.push(m);
    }
    for a in 0..3 {
        for b in a + 1..3 {
            expect(
                !points_equal(f, &triple_points[a], &triple_points[b])?,
                "triple points coincide",
            )?;
        }
    }

    Ok(OrbitReport {
        components,
        base_orbit_dim,
        x0_fixed_samples,
        generic_orbit_dims,
        curves,
        curve_meetings,
        representatives,
        component_meetings,
        triple_points,
    })
}

fn fmt_cones(n: usize, cones: &[ConeRef]) -> String {
    let parts: Vec<String> = cones
        .iter()
        .map(|c| {
            let rays: Vec<String> = c.indices().iter().map(|&r| ray_label(n, r)).collect();
            format!("{{{}}}", rays.join(","))
        })
        .collect();
    format!("[{}]", parts.join(" "))
}

fn fmt_rats(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 3;
        writeln!(out, "components of the boundary: {}", self.components.len())?;
        for (i, r) in &self.components {
            writeln!(out, "  X{i} = V(b{i}) ~ {}", r.name())?;
        }
        writeln!(out, "orbit dimension at the base point: {}", self.base_orbit_dim)?;
        writeln!(out, "X0 pointwise fixed: {} sample points", self.x0_fixed_samples)?;
        for (j, d) in &self.generic_orbit_dims {
            writeln!(out, "generic orbit dimension in X{j}: {d}")?;
        }
        writeln!(out, "fixed curves:")?;
        for c in &self.curves {
            writeln!(
                out,
                "  S{}{} = V{} ({} fixed samples)",
                c.j,
                c.k,
                fmt_cones(n, core::slice::from_ref(&c.cone)),
                c.fixed_samples
            )?;
        }
        writeln!(out, "curve meetings:")?;
        for m in &self.curve_meetings {
            writeln!(out, "  {}: {}", m.what, describe(n, m))?;
        }
        for r in &self.representatives {
            writeln!(out, "  {} = G·{}", r.what, fmt_rats(&r.y))?;
        }
        writeln!(out, "component meetings:")?;
        for m in &self.component_meetings {
            writeln!(out, "  {}: {}", m.what, describe(n, m))?;
        }
        Ok(())
    }
}

fn describe(n: usize, m: &Meeting) -> String {
    match m.points {
        Some(0) => "empty".into(),
        Some(1) => format!("1 point {}", fmt_cones(n, &m.cones)),
        Some(k) => format!("{k} points {}", fmt_cones(n, &m.cones)),
        None => format!("curve {}", fmt_cones(n, &m.cones)),
    }
}
