//! Fourier-Motzkin elimination.
//!
//! A deliberately naive projection used as an independent oracle for
//! [`feasible`](super::feasible). Equalities that mention the eliminated
//! variable are used for substitution; otherwise inequalities are paired.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{Constraint, LinearSystem};
use crate::linalg::Rat;
use crate::LpError;

/// Projects out variable `var`; the result has one variable fewer and is
/// feasible exactly when `sys` is.
pub fn fm_project(sys: &LinearSystem, var: usize) -> Result<LinearSystem, LpError> {
    sys.check_shape()?;
    if var >= sys.num_vars {
        return Err(LpError::VariableIndex {
            index: var,
            vars: sys.num_vars,
        });
    }
    let mut eqs = sys.equalities.clone();
    let mut ges = sys.inequalities.clone();

    if let Some(p) = eqs.iter().position(|c| !c.coeffs[var].is_zero()) {
        let pivot = eqs.remove(p);
        let eliminate = |c: &mut Constraint| {
            if c.coeffs[var].is_zero() {
                return;
            }
            let f = &c.coeffs[var] / &pivot.coeffs[var];
            for (x, y) in c.coeffs.iter_mut().zip(&pivot.coeffs) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            c.rhs -= &f * &pivot.rhs;
        };
        eqs.iter_mut().for_each(eliminate);
        ges.iter_mut().for_each(eliminate);
    } else {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for c in ges {
            if c.coeffs[var].is_positive() {
                pos.push(c);
            } else if c.coeffs[var].is_negative() {
                neg.push(c);
            } else {
                keep.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let wp = -&q.coeffs[var];
                let wq = p.coeffs[var].clone();
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| &wp * a + &wq * b).collect();
                keep.push(Constraint::new(coeffs, &wp * &p.rhs + &wq * &q.rhs));
            }
        }
        ges = keep;
    }

    for c in eqs.iter_mut().chain(ges.iter_mut()) {
        c.coeffs.remove(var);
    }
    Ok(LinearSystem {
        num_vars: sys.num_vars - 1,
        equalities: tidy_equalities(eqs),
        inequalities: tidy_inequalities(ges),
    })
}

/// Drops `0 = 0`, keeps a single `0 = 1` if any row is contradictory.
fn tidy_equalities(eqs: Vec<Constraint>) -> Vec<Constraint> {
    let mut out = Vec::new();
    for c in eqs {
        if c.coeffs.iter().all(Zero::is_zero) {
            if c.rhs.is_zero() {
                continue;
            }
            return alloc::vec![Constraint::new(
                c.coeffs.iter().map(|_| Rat::zero()).collect(),
                Rat::from_integer(1.into())
            )];
        }
        let lead = c.coeffs.iter().find(|x| !x.is_zero()).cloned().expect("nonzero row");
        let coeffs = c.coeffs.iter().map(|x| x / &lead).collect();
        let norm = Constraint::new(coeffs, &c.rhs / &lead);
        if !out.contains(&norm) {
            out.push(norm);
        }
    }
    out
}

/// Normalizes rows so the first nonzero coefficient has absolute value one,
/// keeps only the tightest right-hand side per direction and drops rows that
/// hold trivially.
fn tidy_inequalities(ges: Vec<Constraint>) -> Vec<Constraint> {
    let mut best: BTreeMap<Vec<Rat>, Rat> = BTreeMap::new();
    let mut contradiction = None;
    for c in ges {
        let Some(lead) = c.coeffs.iter().find(|x| !x.is_zero()).map(Signed::abs) else {
            if c.rhs.is_positive() {
                contradiction = Some(c);
            }
            continue;
        };
        let coeffs: Vec<Rat> = c.coeffs.iter().map(|x| x / &lead).collect();
        let rhs = &c.rhs / &lead;
        best.entry(coeffs)
            .and_modify(|r| {
                if rhs > *r {
                    *r = rhs.clone();
                }
            })
            .or_insert(rhs);
    }
    let mut out: Vec<Constraint> = best.into_iter().map(|(k, v)| Constraint::new(k, v)).collect();
    if let Some(c) = contradiction {
        out.push(c);
    }
    out
}

/// Eliminates every variable, greedily picking the one with the fewest
/// generated pairs, and reads off feasibility of the empty system.
pub fn fm_feasible(sys: &LinearSystem) -> Result<bool, LpError> {
    let mut cur = sys.clone();
    cur.check_shape()?;
    while cur.num_vars > 0 {
        let var = choose_variable(&cur);
        cur = fm_project(&cur, var)?;
        if has_trivial_contradiction(&cur) {
            return Ok(false);
        }
    }
    Ok(!has_trivial_contradiction(&cur))
}

fn has_trivial_contradiction(sys: &LinearSystem) -> bool {
    sys.equalities
        .iter()
        .any(|c| c.coeffs.iter().all(Zero::is_zero) && !c.rhs.is_zero())
        || sys
            .inequalities
            .iter()
            .any(|c| c.coeffs.iter().all(Zero::is_zero) && c.rhs.is_positive())
}

fn choose_variable(sys: &LinearSystem) -> usize {
    for c in &sys.equalities {
        if let Some(j) = c.coeffs.iter().position(|x| !x.is_zero()) {
            return j;
        }
    }
    (0..sys.num_vars)
        .min_by_key(|&j| {
            let pos = sys.inequalities.iter().filter(|c| c.coeffs[j].is_positive()).count();
            let neg = sys.inequalities.iter().filter(|c| c.coeffs[j].is_negative()).count();
            pos * neg
        })
        .unwrap_or(0)
}
