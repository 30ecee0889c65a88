//! Published values reproduced from the constructions.

use num_bigint::BigInt;
use num_rational::BigRational;

use pgl2_core::catalog::{case, catalog, CaseId};
use pgl2_core::cover::{build_curve, verify_orbit_identities};
use pgl2_core::fieldlab::{specialize, subfield_polynomials};
use pgl2_core::poly::{family_discriminant, IntPolynomial};
use pgl2_core::realroots::{galois_signature, rank_bound, Signature};
use pgl2_core::reference;
use pgl2_core::selmer::{minimal_polynomial, y_power};

fn ip(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

#[test]
fn quadratic_family_examples() {
    let c2 = case(CaseId::C2);
    assert_eq!(specialize(&c2, 7, 5).unwrap().poly, ip(&[1, 8401, 1]));
    assert_eq!(specialize(&c2, 5, 5).unwrap().poly, ip(&[1, 1560, 1]));
}

#[test]
fn quadratic_family_discriminant() {
    let disc = family_discriminant(&build_curve(CaseId::C2).monic_family());
    assert_eq!(disc, reference::c2_discriminant());
}

#[test]
fn introductory_sextic_is_a_dihedral_specialization() {
    let c = specialize(&case(CaseId::D3), 19, 7).unwrap();
    assert_eq!(c.poly, reference::intro_sextic());
    assert_eq!(c.signature, Some(Signature { r1: 0, r2: 3 }));
    assert_eq!(y_power(19, 7), BigInt::from(893_871_739u64));
}

#[test]
fn dihedral_example_field() {
    let ex = reference::d3_example();
    let c = specialize(&case(CaseId::D3), ex.y, ex.n).unwrap();
    assert_eq!(c.poly, ex.poly);
    assert_eq!(galois_signature(&c.poly).unwrap(), Signature { r1: 0, r2: 3 });
    assert!(c.all_checks_pass(), "{:?}", c.checks);
}

#[test]
fn dihedral_example_subfields() {
    let subs = subfield_polynomials(&case(CaseId::D3), 199, 5).unwrap();
    let y = y_power(199, 5);
    let quad = IntPolynomial::new(vec![(&y - 19) / 36, 3.into(), 1.into()]);
    let cubic = IntPolynomial::new(vec![(&y - 325) / 18, (&y - 235) / 36, 3.into(), 1.into()]);
    assert_eq!(subs, vec![quad, cubic]);
}

#[test]
fn klein_subfields_share_the_middle_coefficient() {
    let subs = subfield_polynomials(&case(CaseId::D2), 13, 5).unwrap();
    let mid = (y_power(13, 5) - 25) / 6;
    assert_eq!(subs.len(), 3);
    for s in &subs {
        assert_eq!(s.coeff(1), mid);
    }
}

#[test]
fn claimed_rank_bounds() {
    let want = [
        (CaseId::C2, 1),
        (CaseId::C3, 2),
        (CaseId::C4, 3),
        (CaseId::C6, 5),
        (CaseId::D2, 3),
        (CaseId::D3, 5),
        (CaseId::D4, 7),
        (CaseId::D6, 11),
    ];
    for (id, bound) in want {
        let c = case(id);
        assert_eq!(c.claimed_bound, bound, "{id}");
        let d = build_curve(id).degree();
        let sig = if matches!(id, CaseId::D3 | CaseId::D4 | CaseId::D6) {
            Signature { r1: 0, r2: d / 2 }
        } else {
            Signature { r1: d, r2: 0 }
        };
        assert_eq!(rank_bound(c.selmer_functions.len(), sig), bound, "{id}");
    }
    assert_eq!(rank_bound(2, Signature { r1: 2, r2: 0 }), 1);
}

#[test]
fn orbit_product_constants() {
    let want = [
        (CaseId::C3, -1),
        (CaseId::C4, -4),
        (CaseId::C6, -27),
        (CaseId::D3, 1),
        (CaseId::D4, 16),
        (CaseId::D6, 729),
    ];
    for (id, c) in want {
        let v = verify_orbit_identities(&case(id).group()).unwrap();
        assert_eq!(v, BigRational::from_integer(c.into()), "{id}");
    }
}

#[test]
fn cyclic_sextic_special_minimal_polynomial() {
    // q = 0 is y^n = 397.
    let p = build_curve(CaseId::C6).monic_at(&BigInt::from(397)).unwrap();
    let g = case(CaseId::C6).selmer_functions.last().unwrap().to_ratfunc();
    let m = minimal_polynomial(&p, &g).unwrap();
    assert_eq!(m.charpoly, ip(&[1, -48, 210, -302, 165, -30, 1]));
}

#[test]
fn cyclic_quartic_special_minimal_polynomial_linear_term() {
    // The displayed T coefficient -2(q^2 + 3q + 4) is -16 at q = 1; the
    // resultant gives -20 = -2(q^2 + 3q + 6). The other coefficients agree.
    let p = build_curve(CaseId::C4).monic_at(&BigInt::from(17)).unwrap();
    let g = case(CaseId::C4).selmer_functions.last().unwrap().to_ratfunc();
    let m = minimal_polynomial(&p, &g).unwrap();
    let shown = reference::q_formula(CaseId::C4).unwrap().at(&BigInt::from(1));
    assert_eq!(m.charpoly, ip(&[1, -20, 34, -12, 1]));
    for i in [0, 2, 3, 4] {
        assert_eq!(m.charpoly.coeff(i), shown.coeff(i), "T^{i}");
    }
    assert_eq!(shown.coeff(1), BigInt::from(-16));
}

#[test]
fn every_case_has_the_paper_degree() {
    let want = [2, 3, 4, 6, 4, 6, 8, 12];
    for (c, d) in catalog().iter().zip(want) {
        assert_eq!(build_curve(c.id).degree(), d, "{}", c.id);
    }
}
