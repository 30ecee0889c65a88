//! Specializing the families at admissible parameters and checking each field.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cas::{cas_classgroup, CasConfig, CasReport};
use crate::catalog::{CaseId, GroupCase, Reality};
use crate::cover::{build_curve_for, build_rt};
use crate::error::{FieldError, SelmerError};
use crate::irreducible::{irreducible, Irreducibility};
use crate::moebius::{Homography, ProjPoint};
use crate::poly::{family_discriminant, AffineFamily, IntPolynomial, RatPolynomial};
use crate::ratfunc::RatFunction;
use crate::realroots::{discriminant_bits, galois_signature, rank_bound, Signature};
use crate::reference;
use crate::selmer::{check_selmer_necessary, y_power};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCandidate {
    pub case_id: CaseId,
    pub y: u64,
    pub n: u32,
    #[serde(with = "poly_strings")]
    pub poly: IntPolynomial,
    /// `None` when the specialization is not squarefree.
    pub signature: Option<Signature>,
    pub disc_bits: u64,
    pub checks: BTreeMap<String, Verdict>,
}

impl FieldCandidate {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// No check failed; inconclusive and skipped checks do not count against.
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|v| *v != Verdict::Fail)
    }

    /// The checks the construction guarantees for every admissible `y`.
    /// Squarefreeness and irreducibility can fail on a thin exceptional set.
    pub fn guaranteed_checks_pass(&self) -> bool {
        self.checks
            .iter()
            .filter(|(k, _)| !matches!(k.as_str(), check::SQUAREFREE | check::IRREDUCIBLE))
            .all(|(_, v)| *v != Verdict::Fail)
    }
}

pub mod check {
    pub const INTEGRAL: &str = "integral";
    pub const PATHS_AGREE: &str = "paths_agree";
    pub const SQUAREFREE: &str = "squarefree";
    pub const SELMER_NORMS: &str = "selmer_norms";
    pub const SPECIAL_UNIT: &str = "special_unit";
    pub const SIGNATURE: &str = "signature";
    pub const RANK_BOUND: &str = "rank_bound";
    pub const IRREDUCIBLE: &str = "irreducible";
}

fn condition_error(case: &GroupCase, y: u64, n: u32) -> Result<(), FieldError> {
    case.conditions.check(y, n).map_err(|f| {
        FieldError::Selmer(SelmerError::ConditionFailed {
            case: case.id,
            condition: f.label,
            detail: f.detail,
        })
    })
}

/// The monic specialization at an admissible `y`, with every exact check recorded.
pub fn specialize(case: &GroupCase, y: u64, n: u32) -> Result<FieldCandidate, FieldError> {
    condition_error(case, y, n)?;
    let curve = build_curve_for(case).map_err(|_| SelmerError::DegenerateOrbit)?;
    let y_pow = y_power(y, n);
    let poly = curve.monic_at(&y_pow).ok_or(FieldError::NotIntegral { case: case.id, y, n })?;
    let mut checks = BTreeMap::new();
    checks.insert(check::INTEGRAL.to_string(), Verdict::Pass);

    let rt = build_rt(&case.group(), &case.a, &ProjPoint::zero()).map_err(|_| SelmerError::DegenerateOrbit)?;
    let t = &curve.lambda * BigRational::from_integer(y_pow.clone());
    checks.insert(check::PATHS_AGREE.to_string(), Verdict::from_bool(rt.at(&t) == poly.to_rational()));

    let squarefree = poly.is_squarefree();
    checks.insert(check::SQUAREFREE.to_string(), Verdict::from_bool(squarefree));

    match check_selmer_necessary(case, y, n) {
        Ok(r) => {
            checks.insert(check::SELMER_NORMS.to_string(), Verdict::from_bool(r.norms_pass()));
            if r.special_charpoly.is_some() {
                checks.insert(check::SPECIAL_UNIT.to_string(), Verdict::from_bool(r.special_is_unit()));
            }
        }
        Err(SelmerError::PoleAtRoot) => {
            checks.insert(check::SELMER_NORMS.to_string(), Verdict::Fail);
        }
        Err(e) => return Err(e.into()),
    }

    let mut signature = None;
    if squarefree {
        match galois_signature(&poly) {
            Ok(sig) => {
                signature = Some(sig);
                let verdict = if case.reality_guaranteed(&y_pow) {
                    let claimed = match case.claimed_reality {
                        Reality::TotallyReal => sig.is_totally_real(),
                        Reality::TotallyImaginary => sig.is_totally_imaginary(),
                    };
                    Verdict::from_bool(claimed)
                } else {
                    Verdict::Skipped
                };
                checks.insert(check::SIGNATURE.to_string(), verdict);
                let bound = rank_bound(case.selmer_functions.len(), sig);
                checks.insert(
                    check::RANK_BOUND.to_string(),
                    if verdict == Verdict::Pass {
                        Verdict::from_bool(bound == case.claimed_bound)
                    } else {
                        Verdict::Skipped
                    },
                );
            }
            Err(_) => {
                checks.insert(check::SIGNATURE.to_string(), Verdict::Fail);
            }
        }
    } else {
        checks.insert(check::SIGNATURE.to_string(), Verdict::Skipped);
    }

    let irr = if squarefree {
        match irreducible(&poly) {
            Irreducibility::Irreducible(_) => Verdict::Pass,
            Irreducibility::Reducible { .. } => Verdict::Fail,
            Irreducibility::Inconclusive { .. } => Verdict::Inconclusive,
        }
    } else {
        Verdict::Fail
    };
    checks.insert(check::IRREDUCIBLE.to_string(), irr);

    let disc_bits = if squarefree { discriminant_bits(&poly) } else { 0 };
    Ok(FieldCandidate { case_id: case.id, y, n, poly, signature, disc_bits, checks })
}

/// Specializes at each `y` on a pool of `width` threads; output keeps input order.
pub fn scan_family(
    case: &GroupCase,
    n: u32,
    ys: &[u64],
    width: usize,
) -> Vec<Result<FieldCandidate, FieldError>> {
    let run = || ys.par_iter().map(|&y| specialize(case, y, n)).collect::<Vec<_>>();
    match rayon::ThreadPoolBuilder::new().num_threads(width.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => ys.iter().map(|&y| specialize(case, y, n)).collect(),
    }
}

/// Displayed subfield polynomials specialized at an admissible `y`.
pub fn subfield_polynomials(case: &GroupCase, y: u64, n: u32) -> Result<Vec<IntPolynomial>, FieldError> {
    if !matches!(case.id, CaseId::D2 | CaseId::D3) {
        return Err(FieldError::UnsupportedCase(case.id));
    }
    condition_error(case, y, n)?;
    let y_pow = BigRational::from_integer(y_power(y, n));
    reference::subfields(case.id)
        .iter()
        .map(|s| {
            s.expanded
                .at(&y_pow)
                .to_integral()
                .ok_or(FieldError::NotIntegral { case: case.id, y, n })
        })
        .collect()
}

/// Elements of the function field generating the subfields, with the power to
/// which their characteristic polynomial is a minimal polynomial: `x + σ(x)` for
/// each involution of a Klein four group, and for `S3` the rotation trace
/// `x + f(x) + f²(x)` and `x + 1/x`.
pub fn subfield_generators(case: &GroupCase) -> Result<Vec<(RatFunction, u32)>, FieldError> {
    let g = case.group();
    let x = RatFunction::x();
    match case.id {
        CaseId::D2 => Ok(g
            .elements()
            .iter()
            .filter(|s| !s.is_identity())
            .map(|s| (&x + &x.compose_homography(s), 2))
            .collect()),
        CaseId::D3 => {
            let f = case.rotation().expect("D3 has a rotation");
            let f2 = f.compose(&f);
            let trace = &(&x + &x.compose_homography(&f)) + &x.compose_homography(&f2);
            let inv = Homography::from_i64(0, 1, 1, 0).expect("inversion");
            Ok(vec![(trace, 3), (&x + &x.compose_homography(&inv), 2)])
        }
        other => Err(FieldError::UnsupportedCase(other)),
    }
}

/// For the `S3` family with an arbitrary base point `a`: the quadratic subfield
/// `(x - Σf^i(a))(x - Σ1/f^i(a)) - t` and the cubic
/// `∏(x - (f^i(a) + 1/f^i(a))) - t(x + 2)`, as families in `t`.
pub fn dihedral3_subfield_families(
    a: &ProjPoint,
) -> Option<(AffineFamily<BigRational>, AffineFamily<BigRational>)> {
    let f = Homography::from_i64(0, -1, 1, 1).expect("order-3 rotation");
    let pts: Vec<BigRational> =
        (1..=3).map(|i| f.power(i).apply(a).to_rational()).collect::<Option<_>>()?;
    if pts.iter().any(Zero::is_zero) {
        return None;
    }
    let lin = |c: BigRational| RatPolynomial::new(vec![-c, BigRational::one()]);
    let s1: BigRational = pts.iter().cloned().sum();
    let s2: BigRational = pts.iter().map(|p| p.recip()).sum();
    let quad = AffineFamily::new(&lin(s1) * &lin(s2), RatPolynomial::constant(-BigRational::one()));
    let cubic_const: RatPolynomial = pts.iter().map(|p| lin(p + p.recip())).product();
    let cubic = AffineFamily::new(
        cubic_const,
        RatPolynomial::new(vec![BigRational::from_integer((-2).into()), -BigRational::one()]),
    );
    Some((quad, cubic))
}

/// `p`-rank of an `S3` sextic from its quadratic and cubic subfields, valid for
/// `p` prime to 6: the `p`-part of the class group splits into the sign
/// component and two copies of the cubic one.
pub fn s3_rank_from_subfields(quadratic: usize, cubic: usize) -> usize {
    quadratic + 2 * cubic
}

/// Exact degree in `Y` of the discriminant of the monic family.
pub fn discriminant_degree_in_y(case: &GroupCase) -> usize {
    let curve = build_curve_for(case).expect("catalog curve");
    family_discriminant(&curve.monic_family()).degree().unwrap_or(0)
}

/// Least-squares slope of `disc_bits` against `log2(y^n)` over the given `y`.
pub fn fitted_disc_exponent(case: &GroupCase, n: u32, ys: &[u64]) -> Option<f64> {
    let curve = build_curve_for(case).ok()?;
    let pts: Vec<(f64, f64)> = ys
        .iter()
        .filter_map(|&y| {
            let y_pow = y_power(y, n);
            let p = curve.monic_family().at(&BigRational::from_integer(y_pow.clone()));
            let d = crate::realroots::discriminant_rational(&p);
            if d.is_zero() {
                return None;
            }
            let bits = bits_f64(&d);
            Some((n as f64 * (y as f64).log2(), bits))
        })
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// `log2 |d|` for a nonzero rational.
fn bits_f64(d: &BigRational) -> f64 {
    let log2 = |v: &BigInt| {
        let b = v.bits();
        let shift = b.saturating_sub(53);
        let top: BigInt = num_traits::Signed::abs(v) >> shift;
        let f: f64 = top.to_string().parse().unwrap_or(0.0);
        f.log2() + shift as f64
    };
    log2(d.numer()) - log2(d.denom())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankClaim {
    pub case_id: CaseId,
    pub y: u64,
    pub n: u32,
    pub signature: Signature,
    pub bound: usize,
    pub computed: usize,
    pub passed: bool,
    pub report: CasReport,
}

/// Compares the CAS n-rank with `rank_bound(s, signature)`.
pub fn verify_rank_claim(cfg: &CasConfig, case: &GroupCase, y: u64, n: u32) -> Result<RankClaim, FieldError> {
    let cand = specialize(case, y, n)?;
    let signature = cand.signature.ok_or(FieldError::Root(crate::error::RootError::NotSquarefree))?;
    let bound = rank_bound(case.selmer_functions.len(), signature);
    let report = cas_classgroup(cfg, &cand.poly, u64::from(n), false)?;
    let computed = report.computed_rank_n;
    Ok(RankClaim { case_id: case.id, y, n, signature, bound, computed, passed: computed >= bound, report })
}

/// Minimum candidates and pass rate for a batch to count as confirming the bound.
pub const BATCH_MIN_CANDIDATES: usize = 20;
pub const BATCH_MIN_PASS_RATE: f64 = 0.5;

#[derive(Debug)]
pub struct RankBatch {
    pub case_id: CaseId,
    pub n: u32,
    pub results: Vec<(u64, Result<RankClaim, FieldError>)>,
}

impl RankBatch {
    pub fn completed(&self) -> usize {
        self.results.iter().filter(|(_, r)| r.is_ok()).count()
    }

    pub fn passes(&self) -> usize {
        self.results.iter().filter(|(_, r)| r.as_ref().is_ok_and(|c| c.passed)).count()
    }

    pub fn pass_rate(&self) -> f64 {
        match self.completed() {
            0 => 0.0,
            c => self.passes() as f64 / c as f64,
        }
    }

    /// Individual failures are expected; the batch fails only on a low pass rate.
    pub fn passed(&self) -> bool {
        self.completed() >= BATCH_MIN_CANDIDATES && self.pass_rate() >= BATCH_MIN_PASS_RATE
    }
}

/// Runs rank claims on a bounded worker pool; results keep the order of `ys`.
pub fn verify_rank_batch(cfg: &CasConfig, case: &GroupCase, n: u32, ys: &[u64]) -> RankBatch {
    let run = || {
        ys.par_iter()
            .map(|&y| (y, verify_rank_claim(cfg, case, y, n)))
            .collect::<Vec<_>>()
    };
    let results = match rayon::ThreadPoolBuilder::new().num_threads(cfg.workers.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => ys.iter().map(|&y| (y, verify_rank_claim(cfg, case, y, n))).collect(),
    };
    RankBatch { case_id: case.id, n, results }
}

mod poly_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::poly::IntPolynomial;

    pub fn serialize<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
        p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPolynomial, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coeffs = v
            .into_iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
