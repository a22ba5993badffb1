//! Property tests for the two algorithms everything else leans on.

use fancert_core::linalg::{det, hnf, kernel_basis_z, rat, snf};
use fancert_core::lp::fm::fm_feasible;
use fancert_core::lp::{feasible, verify_farkas, Feasibility, LinearSystem};
use fancert_core::IntMat;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = IntMat> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r).prop_map(move |rows| {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            IntMat::from_i64(&refs)
        })
    })
}

fn unimodular(m: &IntMat) -> bool {
    det(m).map(|d| d.abs().is_one()).unwrap_or(false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_forms_are_certified(a in small_matrix()) {
        let (s, u, v) = snf(&a);
        prop_assert!(unimodular(&u) && unimodular(&v));
        prop_assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), s.clone());
        let d = a.rows().min(a.cols());
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                prop_assert!(i == j || s[(i, j)].is_zero());
            }
        }
        for i in 1..d {
            let (p, q) = (&s[(i - 1, i - 1)], &s[(i, i)]);
            prop_assert!(!p.is_negative());
            let divides = if p.is_zero() { q.is_zero() } else { (q % p).is_zero() };
            prop_assert!(divides);
        }

        let (h, w) = hnf(&a);
        prop_assert!(unimodular(&w));
        prop_assert_eq!(w.mul(&a).unwrap(), h);

        let k = kernel_basis_z(&a);
        prop_assert!(a.mul(&k.transpose()).unwrap().is_zero());
        let nonzero = (0..d).filter(|&i| !s[(i, i)].is_zero()).count();
        prop_assert_eq!(k.rows() + nonzero, a.cols());
    }

    #[test]
    fn simplex_evidence_checks_and_matches_fm(
        vars in 1usize..=4,
        rows in proptest::collection::vec((proptest::collection::vec(-3i64..=3, 4), -4i64..=4, any::<bool>()), 1..=7),
    ) {
        let mut sys = LinearSystem::new(vars);
        for (coeffs, rhs, eq) in rows {
            let a = coeffs[..vars].iter().map(|&x| rat(x, 1)).collect();
            if eq { sys.add_eq(a, rat(rhs, 1)) } else { sys.add_ge(a, rat(rhs, 1)) }
        }
        let verdict = feasible(&sys).unwrap();
        match &verdict {
            Feasibility::Feasible(x) => prop_assert!(sys.is_satisfied_by(x)),
            Feasibility::Infeasible(c) => prop_assert!(verify_farkas(&sys, c).unwrap()),
        }
        prop_assert_eq!(verdict.is_feasible(), fm_feasible(&sys).unwrap());
    }
}
