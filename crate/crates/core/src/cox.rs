//! Homogeneous coordinates: `X_Σ = (ℂ^{Σ(1)} ∖ Z(Σ)) / G_Σ` for smooth fans.
//!
//! Points upstairs are plain rational vectors indexed by the rays. Points of
//! `X_Σ` are stored in the affine chart of a smooth maximal cone `σ`, whose
//! coordinates are the monomials `χ^{u_k} = ∏_ρ y_ρ^{⟨u_k, p_ρ⟩}` for the
//! basis `u_k` dual to the generators of `σ`. Only the rays' coordinates of
//! `σ` can vanish on the chart, and they enter with exponent one, so every
//! monomial is an exact rational.

use alloc::vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::fan::{ConeRef, Fan};
use crate::linalg::{
    invariant_factors, kernel_basis_z, rank_int, unimodular_inverse, Int, IntMat, IntVec, Rat, RatVec,
};
use crate::CoxError;

/// `n x |Σ(1)|` matrix whose columns are the ray generators.
pub fn ray_matrix(f: &Fan) -> IntMat {
    IntMat::from_columns(f.rank(), f.rays())
}

/// The group `G_Σ ⊆ (ℂ^×)^{Σ(1)}` cut out by `∏_ρ t_ρ^{⟨fᵢ, p_ρ⟩} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasitorusData {
    /// The character equations, i.e. the ray matrix.
    pub relations: IntMat,
    /// Rows span the exponent lattice `{λ : relations · λ = 0}`; parameter
    /// `t_k` of a group element enters coordinate `ρ` with exponent
    /// `kernel_basis[k][ρ]`.
    pub kernel_basis: IntMat,
    /// Smith invariants of the ray matrix; all ones iff `G_Σ` is a torus.
    pub invariant_factors: IntVec,
}

impl QuasitorusData {
    pub fn dim(&self) -> usize {
        self.kernel_basis.rows()
    }
}

pub fn quasitorus(f: &Fan) -> Result<QuasitorusData, CoxError> {
    let relations = ray_matrix(f);
    if rank_int(&relations) < f.rank() {
        return Err(CoxError::RaysDoNotSpan);
    }
    Ok(QuasitorusData {
        kernel_basis: kernel_basis_z(&relations),
        invariant_factors: invariant_factors(&relations),
        relations,
    })
}

/// Rays whose coordinate vanishes.
pub fn zero_support(y: &[Rat]) -> ConeRef {
    ConeRef::new((0..y.len()).filter(|&i| y[i].is_zero()))
}

fn check_len(f: &Fan, y: &[Rat]) -> Result<(), CoxError> {
    if y.len() != f.num_rays() {
        return Err(CoxError::PointLength {
            expected: f.num_rays(),
            found: y.len(),
        });
    }
    Ok(())
}

/// `y ∉ Z(Σ)`: its zero set spans a cone of the fan.
pub fn in_y(f: &Fan, y: &[Rat]) -> Result<bool, CoxError> {
    check_len(f, y)?;
    Ok(f.is_cone(&zero_support(y)))
}

/// A point of `G_Σ`, given by the free parameters `t_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub params: RatVec,
}

impl GroupElement {
    pub fn new(params: RatVec) -> Self {
        GroupElement { params }
    }

    pub fn identity(q: &QuasitorusData) -> Self {
        GroupElement::new(vec![Rat::one(); q.dim()])
    }

    /// The diagonal entries `∏_k t_k^{kernel_basis[k][ρ]}`.
    pub fn diagonal(&self, q: &QuasitorusData) -> Result<RatVec, CoxError> {
        if self.params.len() != q.dim() {
            return Err(CoxError::ParamCount {
                expected: q.dim(),
                found: self.params.len(),
            });
        }
        if let Some(k) = self.params.iter().position(Zero::is_zero) {
            return Err(CoxError::ZeroParameter(k));
        }
        let cols = q.kernel_basis.cols();
        Ok((0..cols)
            .map(|r| {
                self.params
                    .iter()
                    .enumerate()
                    .fold(Rat::one(), |acc, (k, t)| acc * pow(t, &q.kernel_basis[(k, r)]))
            })
            .collect())
    }
}

/// `t^e` for nonzero `t` and any integer exponent.
pub(crate) fn pow(t: &Rat, e: &Int) -> Rat {
    let m = e.abs().to_usize().expect("exponent fits in usize");
    let p = num_traits::pow(t.clone(), m);
    if e.is_negative() {
        p.recip()
    } else {
        p
    }
}

pub fn group_act(q: &QuasitorusData, g: &GroupElement, y: &[Rat]) -> Result<RatVec, CoxError> {
    let d = g.diagonal(q)?;
    if y.len() != d.len() {
        return Err(CoxError::PointLength {
            expected: d.len(),
            found: y.len(),
        });
    }
    Ok(y.iter().zip(&d).map(|(a, b)| a * b).collect())
}

/// A point of `X_Σ` in the chart `U_σ` of a smooth maximal cone.
/// `coords[k]` belongs to the `k`-th ray of `cone` in index order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChartPoint {
    pub cone: ConeRef,
    pub coords: RatVec,
}

impl ChartPoint {
    /// The torus-fixed point of `cone`.
    pub fn origin(cone: ConeRef) -> Self {
        let coords = vec![Rat::zero(); cone.dim()];
        ChartPoint { cone, coords }
    }
}

/// Exponent matrix of the chart: entry `(k, ρ) = ⟨u_k, p_ρ⟩`.
fn chart_exponents(f: &Fan, cone: &ConeRef) -> Result<IntMat, CoxError> {
    if cone.dim() != f.rank() || f.max_cone_index(cone).is_none() {
        return Err(CoxError::BadChart(cone.clone()));
    }
    let dual = unimodular_inverse(&f.generator_matrix(cone)).ok_or_else(|| CoxError::BadChart(cone.clone()))?;
    Ok(dual.mul(&ray_matrix(f)).expect("square times n-row matrix"))
}

fn check_chart_point(f: &Fan, x: &ChartPoint) -> Result<(), CoxError> {
    if x.cone.dim() != f.rank() || f.max_cone_index(&x.cone).is_none() || !f.cone_is_smooth(&x.cone) {
        return Err(CoxError::BadChart(x.cone.clone()));
    }
    if x.coords.len() != f.rank() {
        return Err(CoxError::PointLength {
            expected: f.rank(),
            found: x.coords.len(),
        });
    }
    Ok(())
}

/// `π(y)` in the chart of `cone`.
pub fn quotient_map_in(f: &Fan, y: &[Rat], cone: &ConeRef) -> Result<ChartPoint, CoxError> {
    check_len(f, y)?;
    let zs = zero_support(y);
    if !f.is_cone(&zs) {
        return Err(CoxError::InIrrelevantLocus(zs.indices().to_vec()));
    }
    let exps = chart_exponents(f, cone)?;
    if !zs.is_face_of(cone) {
        return Err(CoxError::NotInChart(cone.clone()));
    }
    let coords = (0..f.rank())
        .map(|k| {
            (0..y.len())
                .filter(|&r| !exps[(k, r)].is_zero())
                .fold(Rat::one(), |acc, r| acc * pow(&y[r], &exps[(k, r)]))
        })
        .collect();
    Ok(ChartPoint {
        cone: cone.clone(),
        coords,
    })
}

/// `π(y)` in the lexicographically first smooth maximal cone containing the
/// zero set of `y`.
pub fn quotient_map(f: &Fan, y: &[Rat]) -> Result<ChartPoint, CoxError> {
    check_len(f, y)?;
    let zs = zero_support(y);
    let cone = f
        .max_cones()
        .iter()
        .filter(|c| c.dim() == f.rank() && zs.is_face_of(c) && f.cone_is_smooth(c))
        .min()
        .ok_or_else(|| CoxError::InIrrelevantLocus(zs.indices().to_vec()))?;
    quotient_map_in(f, y, cone)
}

/// The section of `π` over a chart: chart values on the cone's rays, one
/// elsewhere.
pub fn lift(f: &Fan, x: &ChartPoint) -> Result<RatVec, CoxError> {
    check_chart_point(f, x)?;
    let mut y = vec![Rat::one(); f.num_rays()];
    for (k, &r) in x.cone.indices().iter().enumerate() {
        y[r] = x.coords[k].clone();
    }
    Ok(y)
}

pub fn chart_transition(f: &Fan, x: &ChartPoint, target: &ConeRef) -> Result<ChartPoint, CoxError> {
    let y = lift(f, x)?;
    quotient_map_in(f, &y, target)
}

/// Equality in `X_Σ`: some chart holds both points with equal coordinates.
pub fn points_equal(f: &Fan, x1: &ChartPoint, x2: &ChartPoint) -> Result<bool, CoxError> {
    check_chart_point(f, x1)?;
    check_chart_point(f, x2)?;
    if x1.cone == x2.cone {
        return Ok(x1.coords == x2.coords);
    }
    for c in f.max_cones() {
        if c.dim() != f.rank() || !f.cone_is_smooth(c) {
            continue;
        }
        if let (Ok(p), Ok(q)) = (chart_transition(f, x1, c), chart_transition(f, x2, c)) {
            return Ok(p.coords == q.coords);
        }
    }
    Ok(false)
}

/// The cone `τ` with `x ∈ O(τ)`: the rays of the chart whose coordinate
/// vanishes.
pub fn orbit_label(f: &Fan, x: &ChartPoint) -> Result<ConeRef, CoxError> {
    check_chart_point(f, x)?;
    Ok(ConeRef::new(
        x.cone
            .indices()
            .iter()
            .zip(&x.coords)
            .filter(|(_, c)| c.is_zero())
            .map(|(&r, _)| r),
    ))
}
