//! Exact rational feasibility of linear systems.
//!
//! [`feasible`] either returns a point satisfying every constraint or a Farkas
//! certificate: multipliers whose weighted constraint sum reads `0 >= c` (or
//! `0 = c`) with `c > 0`. Both kinds of evidence can be checked with plain
//! substitution, see [`LinearSystem::is_satisfied_by`] and [`verify_farkas`].
//!
//! The solver eliminates the equalities by exact Gauss-Jordan reduction and
//! runs a phase-one simplex with Bland's rule on the remaining inequalities.
//! [`fm`] holds an independent Fourier-Motzkin implementation used to
//! cross-check it.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::linalg::{dot_rat, rref, solve_rat, Rat, RatVec};
use crate::LpError;

pub mod fm;

/// `coeffs · x (= or >=) rhs`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub coeffs: RatVec,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: RatVec, rhs: Rat) -> Self {
        Constraint { coeffs, rhs }
    }

    pub fn lhs(&self, x: &[Rat]) -> Rat {
        dot_rat(&self.coeffs, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub equalities: Vec<Constraint>,
    /// Each entry means `coeffs · x >= rhs`.
    pub inequalities: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            ..Default::default()
        }
    }

    pub fn add_eq(&mut self, coeffs: RatVec, rhs: Rat) {
        self.equalities.push(Constraint::new(coeffs, rhs));
    }

    pub fn add_ge(&mut self, coeffs: RatVec, rhs: Rat) {
        self.inequalities.push(Constraint::new(coeffs, rhs));
    }

    pub fn check_shape(&self) -> Result<(), LpError> {
        for (index, c) in self.equalities.iter().chain(&self.inequalities).enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(LpError::Width {
                    index,
                    expected: self.num_vars,
                    found: c.coeffs.len(),
                });
            }
        }
        Ok(())
    }

    /// Exact substitution check of every constraint.
    pub fn is_satisfied_by(&self, x: &[Rat]) -> bool {
        x.len() == self.num_vars
            && self.equalities.iter().all(|c| c.lhs(x) == c.rhs)
            && self.inequalities.iter().all(|c| c.lhs(x) >= c.rhs)
    }
}

/// Infeasibility witness: `Σ eq_multipliers[i]·eq[i] + Σ ineq_multipliers[k]·ge[k]`
/// has zero left-hand side and a strictly positive right-hand side, with every
/// inequality multiplier nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub eq_multipliers: RatVec,
    pub ineq_multipliers: RatVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(RatVec),
    Infeasible(FarkasCertificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Checks a Farkas certificate against a system.
pub fn verify_farkas(sys: &LinearSystem, cert: &FarkasCertificate) -> Result<bool, LpError> {
    sys.check_shape()?;
    if cert.eq_multipliers.len() != sys.equalities.len() {
        return Err(LpError::CertificateShape {
            kind: "equality",
            expected: sys.equalities.len(),
            found: cert.eq_multipliers.len(),
        });
    }
    if cert.ineq_multipliers.len() != sys.inequalities.len() {
        return Err(LpError::CertificateShape {
            kind: "inequality",
            expected: sys.inequalities.len(),
            found: cert.ineq_multipliers.len(),
        });
    }
    if cert.ineq_multipliers.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    let mut lhs = vec![Rat::zero(); sys.num_vars];
    let mut rhs = Rat::zero();
    let pairs = sys
        .equalities
        .iter()
        .zip(&cert.eq_multipliers)
        .chain(sys.inequalities.iter().zip(&cert.ineq_multipliers));
    for (c, m) in pairs {
        if m.is_zero() {
            continue;
        }
        for (acc, a) in lhs.iter_mut().zip(&c.coeffs) {
            if !a.is_zero() {
                *acc += m * a;
            }
        }
        rhs += m * &c.rhs;
    }
    Ok(lhs.iter().all(Zero::is_zero) && rhs.is_positive())
}

/// Decides feasibility exactly, returning a witness point or a certificate.
pub fn feasible(sys: &LinearSystem) -> Result<Feasibility, LpError> {
    sys.check_shape()?;
    let n = sys.num_vars;

    // Gauss-Jordan on the equalities: x[pivot_r] = d_r - Σ_f R[r][f] x[f].
    let mut eq_rows: Vec<RatVec> = sys
        .equalities
        .iter()
        .map(|c| {
            let mut r = c.coeffs.clone();
            r.push(c.rhs.clone());
            r
        })
        .collect();
    let pivots = if eq_rows.is_empty() {
        Vec::new()
    } else {
        rref(&mut eq_rows)
    };
    if pivots.last() == Some(&n) {
        return Ok(Feasibility::Infeasible(inconsistent_equalities(sys)));
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();

    // Substitute the pivot variables into every inequality.
    let reduced: Vec<Constraint> = sys
        .inequalities
        .iter()
        .map(|c| {
            let mut coeffs: RatVec = free.iter().map(|&f| c.coeffs[f].clone()).collect();
            let mut rhs = c.rhs.clone();
            for (r, &p) in pivots.iter().enumerate() {
                let w = &c.coeffs[p];
                if w.is_zero() {
                    continue;
                }
                for (k, &f) in free.iter().enumerate() {
                    let rf = &eq_rows[r][f];
                    if !rf.is_zero() {
                        coeffs[k] -= w * rf;
                    }
                }
                rhs -= w * &eq_rows[r][n];
            }
            Constraint::new(coeffs, rhs)
        })
        .collect();

    match phase_one(free.len(), &reduced) {
        PhaseOne::Feasible(xf) => {
            let mut x = vec![Rat::zero(); n];
            for (k, &f) in free.iter().enumerate() {
                x[f] = xf[k].clone();
            }
            for (r, &p) in pivots.iter().enumerate() {
                let mut v = eq_rows[r][n].clone();
                for (k, &f) in free.iter().enumerate() {
                    let rf = &eq_rows[r][f];
                    if !rf.is_zero() && !xf[k].is_zero() {
                        v -= rf * &xf[k];
                    }
                }
                x[p] = v;
            }
            debug_assert!(sys.is_satisfied_by(&x));
            Ok(Feasibility::Feasible(x))
        }
        PhaseOne::Infeasible(z) => {
            // Σ z_k A_k lies in the row space of the equalities; pick the
            // equality multipliers that cancel it.
            let mut target = vec![Rat::zero(); n];
            for (c, zk) in sys.inequalities.iter().zip(&z) {
                if zk.is_zero() {
                    continue;
                }
                for (t, a) in target.iter_mut().zip(&c.coeffs) {
                    if !a.is_zero() {
                        *t -= zk * a;
                    }
                }
            }
            let y = if sys.equalities.is_empty() {
                Vec::new()
            } else {
                let et: Vec<RatVec> = (0..n)
                    .map(|j| sys.equalities.iter().map(|c| c.coeffs[j].clone()).collect())
                    .collect();
                solve_rat(&et, sys.equalities.len(), &target)
                    .expect("inequality combination lies in the equality row space")
            };
            let cert = FarkasCertificate {
                eq_multipliers: y,
                ineq_multipliers: z,
            };
            debug_assert_eq!(verify_farkas(sys, &cert), Ok(true));
            Ok(Feasibility::Infeasible(cert))
        }
    }
}

/// Certificate for an inconsistent equality block: `y` with `Eᵀy = 0`,
/// `e·y = 1`.
fn inconsistent_equalities(sys: &LinearSystem) -> FarkasCertificate {
    let m = sys.equalities.len();
    let mut rows: Vec<RatVec> = (0..sys.num_vars)
        .map(|j| sys.equalities.iter().map(|c| c.coeffs[j].clone()).collect())
        .collect();
    rows.push(sys.equalities.iter().map(|c| c.rhs.clone()).collect());
    let mut rhs = vec![Rat::zero(); sys.num_vars];
    rhs.push(Rat::one());
    let y = solve_rat(&rows, m, &rhs).expect("inconsistent equalities admit a certificate");
    FarkasCertificate {
        eq_multipliers: y,
        ineq_multipliers: vec![Rat::zero(); sys.inequalities.len()],
    }
}

enum PhaseOne {
    Feasible(RatVec),
    /// Nonnegative multipliers on the reduced inequalities.
    Infeasible(RatVec),
}

/// Phase-one simplex for `{A x >= b}` with free `x`.
///
/// Columns are `x⁺ | x⁻ | surplus | artificial`. Rows with `b_k <= 0` start
/// with their surplus variable basic, the others with an artificial one.
fn phase_one(nf: usize, rows: &[Constraint]) -> PhaseOne {
    let m = rows.len();
    if m == 0 {
        return PhaseOne::Feasible(vec![Rat::zero(); nf]);
    }
    let surplus0 = 2 * nf;
    let art0 = surplus0 + m;
    let ncols = art0 + m;

    let mut sign = Vec::with_capacity(m);
    let mut tab: Vec<RatVec> = Vec::with_capacity(m);
    let mut rhs: RatVec = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut init: Vec<usize> = Vec::with_capacity(m);
    for (k, c) in rows.iter().enumerate() {
        let s = if c.rhs.is_positive() { Rat::one() } else { -Rat::one() };
        let mut row = vec![Rat::zero(); ncols];
        for j in 0..nf {
            if !c.coeffs[j].is_zero() {
                row[j] = &s * &c.coeffs[j];
                row[nf + j] = -&row[j];
            }
        }
        row[surplus0 + k] = -&s;
        let start = if s.is_positive() {
            row[art0 + k] = Rat::one();
            art0 + k
        } else {
            surplus0 + k
        };
        rhs.push(&s * &c.rhs);
        basis.push(start);
        init.push(start);
        sign.push(s);
        tab.push(row);
    }
    let cost = |j: usize| if j >= art0 { Rat::one() } else { Rat::zero() };

    // Reduced costs d_j = c_j - c_B B⁻¹ A_j and the objective value.
    let mut red: RatVec = (0..ncols).map(cost).collect();
    let mut obj = Rat::zero();
    for i in 0..m {
        if basis[i] >= art0 {
            for j in 0..ncols {
                if !tab[i][j].is_zero() {
                    red[j] -= &tab[i][j];
                }
            }
            obj += &rhs[i];
        }
    }

    // Bland: lowest-index improving column, artificials never re-enter.
    while let Some(enter) = (0..art0).find(|&j| red[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            let a = &tab[i][enter];
            if !a.is_positive() {
                continue;
            }
            let ratio = &rhs[i] / a;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero, so some row
        // always limits the step.
        let (r, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut rhs, r, enter);
        let f = red[enter].clone();
        for j in 0..ncols {
            if !tab[r][j].is_zero() {
                red[j] -= &f * &tab[r][j];
            }
        }
        obj += &f * &rhs[r];
        basis[r] = enter;
    }

    if obj.is_zero() {
        let mut x = vec![Rat::zero(); nf];
        for (i, &b) in basis.iter().enumerate() {
            if b < nf {
                x[b] += &rhs[i];
            } else if b < 2 * nf {
                x[b - nf] -= &rhs[i];
            }
        }
        return PhaseOne::Feasible(x);
    }
    // Simplex multipliers y_k = c_init(k) - d_init(k), then undo the row signs.
    let z = (0..m)
        .map(|k| {
            let j = init[k];
            let y = cost(j) - &red[j];
            y * &sign[k]
        })
        .collect();
    PhaseOne::Infeasible(z)
}

fn pivot(tab: &mut [RatVec], rhs: &mut [Rat], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    if !inv.is_one() {
        for x in tab[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        rhs[r] *= &inv;
    }
    let prow = tab[r].clone();
    let prhs = rhs[r].clone();
    for i in 0..tab.len() {
        if i == r || tab[i][c].is_zero() {
            continue;
        }
        let f = tab[i][c].clone();
        for (x, p) in tab[i].iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        rhs[i] -= &f * &prhs;
    }
}
