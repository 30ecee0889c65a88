//! The eight finite subgroups of PGL2(Q) together with the choices that turn
//! each into a family of number fields: generators, the point `a` (with
//! `b = 0`), the congruence conditions on `y`, and the list of functions whose
//! values give classes of order `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::moebius::{generate_group, FiniteSubgroup, Homography, ProjPoint, DEFAULT_GROUP_CAP};
use crate::selmer::{
    CongruenceCondition, ConditionLabels, LinearForm, NConstraint, ResidueRule, SelmerFunction,
    UnitPole,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    C2,
    C3,
    C4,
    C6,
    D2,
    D3,
    D4,
    D6,
}

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId::C2,
        CaseId::C3,
        CaseId::C4,
        CaseId::C6,
        CaseId::D2,
        CaseId::D3,
        CaseId::D4,
        CaseId::D6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::C2 => "C2",
            CaseId::C3 => "C3",
            CaseId::C4 => "C4",
            CaseId::C6 => "C6",
            CaseId::D2 => "D2",
            CaseId::D3 => "D3",
            CaseId::D4 => "D4",
            CaseId::D6 => "D6",
        }
    }

    pub fn is_dihedral(self) -> bool {
        matches!(self, CaseId::D2 | CaseId::D3 | CaseId::D4 | CaseId::D6)
    }

    pub fn group_order(self) -> usize {
        match self {
            CaseId::C2 => 2,
            CaseId::C3 => 3,
            CaseId::C4 | CaseId::D2 => 4,
            CaseId::C6 | CaseId::D3 => 6,
            CaseId::D4 => 8,
            CaseId::D6 => 12,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown case `{s}` (expected one of C2 C3 C4 C6 D2 D3 D4 D6)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reality {
    TotallyReal,
    TotallyImaginary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCase {
    pub id: CaseId,
    pub generators: Vec<Homography>,
    pub a: ProjPoint,
    pub b: ProjPoint,
    /// `ζ + ζ̄` for the first generator when it is a rotation of order 3, 4 or 6.
    pub trace: Option<i64>,
    /// Number `s` of independent functions, i.e. the n-rank of the Picard subgroup.
    pub rank_count: usize,
    /// Lower bound on the n-rank of the class group claimed for this family.
    pub claimed_bound: usize,
    pub claimed_reality: Reality,
    /// The claimed signature is guaranteed once `y^n` exceeds this value.
    pub reality_threshold: Option<u64>,
    pub conditions: CongruenceCondition,
    pub selmer_functions: Vec<SelmerFunction>,
    pub unit_pole: Option<UnitPole>,
}

impl GroupCase {
    pub fn group(&self) -> FiniteSubgroup {
        generate_group(&self.generators, DEFAULT_GROUP_CAP).expect("catalog generators are finite")
    }

    /// The rotation `z ↦ ((t+1)z - 1)/(z + 1)` when the case has one.
    pub fn rotation(&self) -> Option<Homography> {
        self.trace.map(Homography::rotation_with_trace)
    }

    /// Order of the rotation, 3, 4 or 6.
    pub fn rotation_order(&self) -> Option<u32> {
        self.trace.map(|t| match t {
            -1 => 3,
            0 => 4,
            1 => 6,
            _ => unreachable!("rational rotations have trace -1, 0 or 1"),
        })
    }

    /// Whether the claimed signature is guaranteed for this value of `y^n`.
    pub fn reality_guaranteed(&self, y_pow: &num_bigint::BigInt) -> bool {
        match self.reality_threshold {
            None => true,
            Some(t) => *y_pow > num_bigint::BigInt::from(t),
        }
    }
}

fn lf(alpha: i64, beta: i64) -> LinearForm {
    LinearForm::new(alpha, beta)
}

fn lin(alpha: i64, beta: i64) -> SelmerFunction {
    SelmerFunction::linear(lf(alpha, beta))
}

fn over(alpha: i64, beta: i64, pole: LinearForm) -> SelmerFunction {
    SelmerFunction::OverPole { form: lf(alpha, beta), pole }
}

fn square(pole: LinearForm, divisor: i64) -> SelmerFunction {
    SelmerFunction::PoleSquare { pole, divisor }
}

fn hom(p: i64, q: i64, r: i64, s: i64) -> Homography {
    Homography::from_i64(p, q, r, s).expect("catalog homographies are invertible")
}

fn labels(n: &str, residue: &str, coprime: &str) -> ConditionLabels {
    ConditionLabels {
        n: n.to_string(),
        residue: residue.to_string(),
        coprime: coprime.to_string(),
    }
}

fn by_class(n_modulus: u64, classes: &[(u64, u64)]) -> ResidueRule {
    ResidueRule::ByExponentClass { n_modulus, classes: classes.to_vec() }
}

/// The catalog entry for `id`.
pub fn case(id: CaseId) -> GroupCase {
    let x_plus_1 = lf(1, -1);
    let x_minus_1 = lf(1, 1);
    let inversion = hom(0, 1, 1, 0);
    match id {
        CaseId::C2 => GroupCase {
            id,
            generators: vec![inversion],
            a: ProjPoint::integer(2),
            b: ProjPoint::zero(),
            trace: None,
            rank_count: 2,
            claimed_bound: 1,
            claimed_reality: Reality::TotallyReal,
            reality_threshold: Some(9),
            conditions: CongruenceCondition {
                n_constraint: NConstraint::Any,
                modulus: 2,
                rule: by_class(1, &[(0, 1)]),
                coprime_set: vec![3],
                labels: labels("-", "i", "i"),
            },
            selmer_functions: vec![lin(1, 0), lin(1, 2)],
            unit_pole: None,
        },
        CaseId::C3 => GroupCase {
            id,
            generators: vec![hom(0, -1, 1, 1)],
            a: ProjPoint::integer(1),
            b: ProjPoint::zero(),
            trace: Some(-1),
            rank_count: 4,
            claimed_bound: 2,
            claimed_reality: Reality::TotallyReal,
            reality_threshold: None,
            conditions: CongruenceCondition {
                n_constraint: NConstraint::Any,
                modulus: 2,
                rule: by_class(1, &[(0, 1)]),
                coprime_set: vec![3],
                labels: labels("-", "i", "i"),
            },
            selmer_functions: vec![lin(1, 0), lin(1, -1), lin(1, 1), lin(1, -2)],
            unit_pole: None,
        },
        CaseId::C4 => GroupCase {
            id,
            generators: vec![hom(1, -1, 1, 1)],
            a: ProjPoint::integer(2),
            b: ProjPoint::zero(),
            trace: Some(0),
            rank_count: 6,
            claimed_bound: 3,
            claimed_reality: Reality::TotallyReal,
            reality_threshold: None,
            conditions: CongruenceCondition {
                n_constraint: NConstraint::Odd,
                modulus: 12,
                rule: by_class(1, &[(0, 5)]),
                coprime_set: vec![5],
                labels: labels("i", "ii", "iii"),
            },
            selmer_functions: vec![
                lin(1, 0),
                over(1, 1, x_plus_1),
                over(1, -3, x_plus_1),
                lin(1, 2),
                lin(2, -1),
                square(x_plus_1, 2),
            ],
            unit_pole: Some(UnitPole { pole: x_plus_1, divisor: 2 }),
        },
        CaseId::C6 => GroupCase {
            id,
            generators: vec![hom(2, -1, 1, 1)],
            a: ProjPoint::integer(3),
            b: ProjPoint::zero(),
            trace: Some(1),
            rank_count: 10,
            claimed_bound: 5,
            claimed_reality: Reality::TotallyReal,
            reality_threshold: None,
            conditions: CongruenceCondition {
                n_constraint: NConstraint::CoprimeTo6,
                modulus: 1080,
                rule: by_class(12, &[(1, 397), (5, 37), (7, 613), (11, 253)]),
                coprime_set: vec![7],
                labels: labels("i", "ii", "iii"),
            },
            selmer_functions: vec![
                lin(1, 0),
                lin(1, 1),
                over(2, 1, x_plus_1),
                over(1, 2, x_plus_1),
                lin(1, 3),
                over(1, -4, x_plus_1),
                lin(2, -1),
                lin(3, 2),
                over(4, 5, x_plus_1),
                square(x_plus_1, 3),
            ],
            unit_pole: Some(UnitPole { pole: x_plus_1, divisor: 3 }),
        },
        CaseId::D2 => GroupCase {
            id,
            generators: vec![hom(1, 1, 1, -1), hom(0, -1, 1, 0)],
            a: ProjPoint::integer(2),
            b: ProjPoint::zero(),
            trace: None,
            rank_count: 6,
            claimed_bound: 3,
            claimed_reality: Reality::TotallyReal,
            reality_threshold: Some(50),
            conditions: CongruenceCondition {
                n_constraint: NConstraint::Any,
                modulus: 12,
                rule: by_class(1, &[(0, 1)]),
                coprime_set: vec![5, 7],
                labels: labels("-", "i", "ii"),
            },
            selmer_functions: vec![
                lin(1, 0),
                over(1, -1, x_minus_1),
                lin(1, 2),
                lin(2, -1),
                over(1, 3, x_minus_1),
                square(x_minus_1, 2),
            ],
            unit_pole: Some(UnitPole { pole: x_minus_1, divisor: 2 }),
        },
        CaseId::D3 => GroupCase {
            id,
            generators: vec![hom(0, -1, 1, 1), inversion],
            a: ProjPoint::integer(2),
            b: ProjPoint::zero(),
            trace: Some(-1),
            rank_count: 7,
            claimed_bound: 5,
            claimed_reality: Reality::TotallyImaginary,
            reality_threshold: Some(100),
            conditions: CongruenceCondition {
                n_constraint: NConstraint::Odd,
                modulus: 36,
                rule: by_class(1, &[(0, 19)]),
                coprime_set: vec![5, 7],
                labels: labels("i", "ii", "iii"),
            },
            selmer_functions: vec![
                lin(1, 0),
                lin(1, -1),
                lin(1, 2),
                lin(1, -3),
                lin(2, 1),
                lin(2, -3),
                lin(3, -1),
            ],
            unit_pole: None,
        },
        CaseId::D4 => GroupCase {
            id,
            generators: vec![hom(1, -1, 1, 1), inversion],
            a: ProjPoint::integer(2),
            b: ProjPoint::zero(),
            trace: Some(0),
            rank_count: 10,
            claimed_bound: 7,
            claimed_reality: Reality::TotallyImaginary,
            reality_threshold: Some(49),
            conditions: CongruenceCondition {
                n_constraint: NConstraint::CoprimeTo6,
                modulus: 144,
                rule: by_class(3, &[(1, 49), (2, 97)]),
                coprime_set: vec![5, 7],
                labels: labels("i", "ii", "iii"),
            },
            selmer_functions: vec![
                lin(1, 0),
                over(1, 1, x_plus_1),
                lin(1, 2),
                lin(1, -2),
                over(1, 3, x_plus_1),
                over(1, -3, x_plus_1),
                lin(2, 1),
                lin(2, -1),
                over(3, 1, x_plus_1),
                square(x_plus_1, 2),
            ],
            unit_pole: Some(UnitPole { pole: x_plus_1, divisor: 2 }),
        },
        CaseId::D6 => GroupCase {
            id,
            generators: vec![hom(2, -1, 1, 1), inversion],
            a: ProjPoint::integer(-2),
            b: ProjPoint::zero(),
            trace: Some(1),
            rank_count: 16,
            claimed_bound: 11,
            claimed_reality: Reality::TotallyImaginary,
            reality_threshold: Some(20449),
            conditions: CongruenceCondition {
                n_constraint: NConstraint::CoprimeTo6,
                modulus: 388_800,
                rule: ResidueRule::PowerResidue { t0: 117_649 },
                coprime_set: vec![7, 11, 13],
                labels: labels("i", "ii", "iii"),
            },
            selmer_functions: vec![
                lin(1, 0),
                lin(1, 1),
                over(2, 1, x_plus_1),
                over(1, 2, x_plus_1),
                lin(1, -2),
                over(1, 5, x_plus_1),
                lin(2, 3),
                over(5, 4, x_plus_1),
                lin(3, 1),
                over(4, -1, x_plus_1),
                lin(2, -1),
                over(5, 1, x_plus_1),
                lin(3, 2),
                over(4, 5, x_plus_1),
                lin(1, 3),
                square(x_plus_1, 3),
            ],
            unit_pole: Some(UnitPole { pole: x_plus_1, divisor: 3 }),
        },
    }
}

/// All eight cases in canonical order.
pub fn catalog() -> Vec<GroupCase> {
    CaseId::ALL.into_iter().map(case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_ids_parse() {
        assert_eq!("d6".parse::<CaseId>(), Ok(CaseId::D6));
        assert!("C5".parse::<CaseId>().is_err());
    }

    #[test]
    fn group_orders_match_ids() {
        for c in catalog() {
            let g = c.group();
            assert_eq!(g.order(), c.id.group_order(), "{}", c.id);
            assert_eq!(g.is_abelian(), !c.id.is_dihedral() || c.id == CaseId::D2, "{}", c.id);
        }
    }

    #[test]
    fn rotation_is_first_generator() {
        for c in catalog() {
            if let Some(rot) = c.rotation() {
                assert_eq!(rot, c.generators[0], "{}", c.id);
                assert_eq!(rot.element_order(24).unwrap(), c.rotation_order().unwrap());
            }
        }
    }

    #[test]
    fn selmer_list_length_is_rank_count() {
        for c in catalog() {
            assert_eq!(c.selmer_functions.len(), c.rank_count, "{}", c.id);
        }
    }

    #[test]
    fn catalog_roundtrips_through_json() {
        let cat = catalog();
        let json = serde_json::to_string(&cat).unwrap();
        let back: Vec<GroupCase> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cat);
    }
}
