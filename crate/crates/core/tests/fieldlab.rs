//! Specializations: discriminant growth, signatures and candidate records.

use pgl2_core::catalog::{case, catalog, CaseId};
use pgl2_core::fieldlab::{
    check, discriminant_degree_in_y, fitted_disc_exponent, scan_family, specialize,
    subfield_polynomials, Verdict,
};
use pgl2_core::error::{FieldError, SelmerError};

/// Relative tolerance of the fitted exponent.
const EXPONENT_TOLERANCE: f64 = 0.10;

#[test]
fn discriminant_degree_in_y_per_case() {
    // Cyclic families have squarefree B, so the degree is 2d - 2. The dihedral
    // B has double roots, which lowers it.
    for c in catalog() {
        let d = pgl2_core::cover::build_curve(c.id).degree();
        let want = match c.id {
            CaseId::D2 => 6,
            CaseId::D3 => 7,
            CaseId::D4 => 10,
            CaseId::D6 => 16,
            _ => 2 * d - 2,
        };
        assert_eq!(discriminant_degree_in_y(&c), want, "{}", c.id);
    }
}

#[test]
fn fitted_discriminant_exponent() {
    // log2 |disc| against log2(y^n) for y from 10^3 to 10^6.
    for c in catalog() {
        let n = if c.conditions.n_constraint.allows(5) { 5 } else { 7 };
        let ys: Vec<u64> = [1_000u64, 10_000, 100_000, 1_000_000]
            .iter()
            .filter_map(|&lo| c.conditions.admissible_ys(n, lo, 1).first().copied())
            .collect();
        let slope = fitted_disc_exponent(&c, n, &ys).unwrap();
        let exact = discriminant_degree_in_y(&c) as f64;
        assert!(
            (slope - exact).abs() <= EXPONENT_TOLERANCE * exact,
            "{}: fitted {slope:.3}, exact {exact}",
            c.id
        );
    }
}

#[test]
fn discriminant_bits_grow_with_y() {
    for c in catalog().into_iter().filter(|c| c.id != CaseId::D6) {
        let n = if c.conditions.n_constraint.allows(5) { 5 } else { 7 };
        let ys = c.conditions.admissible_ys(n, 2, 6);
        let bits: Vec<u64> = scan_family(&c, n, &ys, 2).into_iter().map(|r| r.unwrap().disc_bits).collect();
        assert!(bits.windows(2).all(|w| w[0] < w[1]), "{}: {bits:?}", c.id);
    }
}

#[test]
fn signatures_beyond_thresholds() {
    for c in catalog() {
        let n = if c.conditions.n_constraint.allows(5) { 5 } else { 7 };
        for y in c.conditions.admissible_ys(n, 2, 8) {
            let cand = specialize(&c, y, n).unwrap();
            assert_eq!(cand.checks[check::SIGNATURE], Verdict::Pass, "{} y = {y}", c.id);
            assert_eq!(cand.checks[check::RANK_BOUND], Verdict::Pass, "{} y = {y}", c.id);
        }
    }
}

#[test]
fn scan_keeps_order_and_matches_sequential() {
    let c = case(CaseId::C3);
    let ys = c.conditions.admissible_ys(5, 1, 12);
    let par = scan_family(&c, 5, &ys, 4);
    let seq: Vec<_> = ys.iter().map(|&y| specialize(&c, y, 5)).collect();
    assert_eq!(
        par.into_iter().map(|r| r.unwrap()).collect::<Vec<_>>(),
        seq.into_iter().map(|r| r.unwrap()).collect::<Vec<_>>()
    );
}

#[test]
fn failed_conditions_are_named() {
    let c4 = case(CaseId::C4);
    let name = |r: Result<_, FieldError>| match r {
        Err(FieldError::Selmer(SelmerError::ConditionFailed { condition, .. })) => condition,
        other => panic!("{other:?}"),
    };
    assert_eq!(name(specialize(&c4, 17, 4)), "i");
    assert_eq!(name(specialize(&c4, 19, 5)), "ii");
    assert_eq!(name(specialize(&c4, 65, 5)), "iii");
}

#[test]
fn subfields_require_admissible_parameters() {
    assert!(subfield_polynomials(&case(CaseId::D3), 198, 5).is_err());
    assert!(subfield_polynomials(&case(CaseId::D2), 7, 5).is_err());
    assert_eq!(subfield_polynomials(&case(CaseId::D2), 13, 5).unwrap().len(), 3);
}

#[test]
fn jsonl_record_has_the_candidate_fields() {
    let cand = specialize(&case(CaseId::C2), 7, 5).unwrap();
    let line = serde_json::to_string(&cand).unwrap();
    let fields = ["case_id", "y", "n", "poly", "signature", "disc_bits", "checks"];
    let pos: Vec<usize> = fields.iter().map(|f| line.find(&format!("\"{f}\":")).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{line}");
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["signature"], serde_json::json!({"r1": 2, "r2": 0}));
}
