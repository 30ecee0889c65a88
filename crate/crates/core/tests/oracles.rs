//! Library results against the independent oracles in `common`.

mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::*;
use pgl2_core::catalog::{catalog, CaseId};
use pgl2_core::cover::build_curve;
use pgl2_core::moebius::{orbit, ProjPoint};
use pgl2_core::poly::{discriminant, resultant, IntPolynomial, RatPolynomial};
use pgl2_core::selmer::{charpoly, norm_of_function, y_power, SelmerFunction};

fn rat(c: &[i64]) -> Vec<BigRational> {
    c.iter().map(|&v| q(v)).collect()
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec(-20i64..=20, d), 1i64..=5).prop_map(|(mut c, lead)| {
            c.push(lead);
            c
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_matches_sylvester(a in small_poly(5), b in small_poly(5)) {
        let ra = RatPolynomial::new(rat(&a));
        let rb = RatPolynomial::new(rat(&b));
        prop_assert_eq!(resultant(&ra, &rb), sylvester(&rat(&a), &rat(&b)));
    }

    #[test]
    fn discriminant_matches_sylvester(a in small_poly(5)) {
        let p = RatPolynomial::new(rat(&a));
        let d = a.len() - 1;
        let deriv: Vec<BigRational> = (1..=d).map(|i| q(a[i] * i as i64)).collect();
        // disc = (-1)^{d(d-1)/2} Res(P, P') / lc
        let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
        let expect = sylvester(&rat(&a), &deriv) * q(sign) / q(a[d]);
        prop_assert_eq!(discriminant(&p), expect);
    }
}

#[test]
fn group_closure_matches_oracle() {
    for case in catalog() {
        let gens: Vec<Mat> = case
            .generators
            .iter()
            .map(|h| {
                let (p, q, r, s) = h.entries();
                [p, q, r, s].map(|v| i64::try_from(v.clone()).unwrap())
            })
            .collect();
        let oracle = closure(&gens, 64).unwrap();
        let g = case.group();
        let built: BTreeSet<Mat> = g
            .elements()
            .iter()
            .map(|h| {
                let (p, q, r, s) = h.entries();
                normalize([p, q, r, s].map(|v| i64::try_from(v.clone()).unwrap()))
            })
            .collect();
        assert_eq!(built, oracle, "{}", case.id);
        assert_eq!(oracle.len(), case.id.group_order(), "{}", case.id);
    }
}

#[test]
fn orbits_match_oracle() {
    for case in catalog() {
        let g = case.group();
        let mats = g.elements().iter().map(|h| {
            let (p, q, r, s) = h.entries();
            [p, q, r, s].map(|v| i64::try_from(v.clone()).unwrap())
        });
        let (an, ad) = (
            i64::try_from(case.a.num().clone()).unwrap(),
            i64::try_from(case.a.den().clone()).unwrap(),
        );
        let oracle: BTreeSet<(i64, i64)> = mats.map(|m| apply(&m, an, ad)).collect();
        let built: BTreeSet<(i64, i64)> = orbit(&g, &case.a)
            .iter()
            .map(|p| (i64::try_from(p.num().clone()).unwrap(), i64::try_from(p.den().clone()).unwrap()))
            .collect();
        assert_eq!(built, oracle, "{}", case.id);
    }
}

#[test]
fn charpoly_matches_regular_representation() {
    // Every listed function at a small admissible specialization of each family.
    for case in catalog() {
        let n = if case.conditions.n_constraint.allows(5) { 5 } else { 7 };
        let y = case.conditions.admissible_ys(n, 2, 1)[0];
        let p = build_curve(case.id).monic_at(&y_power(y, n)).unwrap();
        for f in &case.selmer_functions {
            let g = f.to_ratfunc();
            let (num, den) = g.to_fraction();
            let oracle = charpoly_by_matrix(&p, &num, &den).expect("denominator is invertible mod P");
            let built = charpoly(&p.to_rational(), &g).unwrap();
            assert_eq!(built, oracle, "{} {f}", case.id);
        }
    }
}

#[test]
fn norms_match_determinant() {
    // The norm of g(θ) is det of multiplication by g; compare with the
    // homogeneous evaluation used by the library.
    for id in [CaseId::C2, CaseId::C4, CaseId::D3, CaseId::D6] {
        let case = pgl2_core::catalog::case(id);
        let n = if case.conditions.n_constraint.allows(5) { 5 } else { 7 };
        let y = case.conditions.admissible_ys(n, 2, 1)[0];
        let p = build_curve(id).monic_at(&y_power(y, n)).unwrap();
        for f in case.selmer_functions.iter().filter(|f| matches!(f, SelmerFunction::Linear { .. })) {
            let (num, _) = f.to_ratfunc().to_fraction();
            let to = |g: &IntPolynomial| g.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect::<Vec<_>>();
            let m = mult_matrix(&to(&p), &to(&num));
            let scale = f.to_ratfunc().scale().clone();
            let d = p.degree().unwrap() as i32;
            let expect = det(m) * num_traits::pow::Pow::pow(&scale, d);
            assert_eq!(norm_of_function(&p, f).unwrap(), expect, "{id} {f}");
        }
    }
}

#[test]
fn integral_factor_roots() {
    for (n, d) in [(2i64, 1i64), (-1, 3), (5, 4)] {
        let p = ProjPoint::from_i64(n, d).unwrap();
        let f = pgl2_core::cover::integral_factor(&p);
        assert!(f.eval_rational(&BigRational::new(BigInt::from(n), BigInt::from(d))) == q(0));
    }
}
