//! Arithmetic side conditions on the family parameter and the functions whose
//! values give n-Selmer classes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::{CaseId, GroupCase};
use crate::cover::{build_curve_for, CurveFamily};
use crate::error::SelmerError;
use crate::moebius::{orbit, ProjPoint};
use crate::poly::{resultant, IntPolynomial, RatPolynomial};
use crate::ratfunc::RatFunction;

/// The linear form `αx - β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    pub alpha: i64,
    pub beta: i64,
}

impl LinearForm {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        LinearForm { alpha, beta }
    }

    /// The primitive form vanishing at a finite point `β/α`.
    pub fn from_point(p: &ProjPoint) -> Option<Self> {
        if p.is_infinity() {
            return None;
        }
        Some(LinearForm::new(p.den().to_i64()?, p.num().to_i64()?))
    }

    pub fn root(&self) -> ProjPoint {
        ProjPoint::from_i64(self.beta, self.alpha).expect("linear form is nonzero")
    }

    pub fn poly(&self) -> IntPolynomial {
        IntPolynomial::linear(self.alpha.into(), self.beta.into())
    }

    /// `α p - β` evaluated homogeneously: `α num - β den`.
    pub fn value_at(&self, p: &ProjPoint) -> BigInt {
        BigInt::from(self.alpha) * p.num() - BigInt::from(self.beta) * p.den()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// The linear factor removed from the ψ's and φ's, and the constant `ζ + ζ̄ + 2`
/// dividing the square of it in the last function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitPole {
    pub pole: LinearForm,
    pub divisor: i64,
}

impl UnitPole {
    /// `ε = 1` when the divisor divides the value of the form at the pole.
    pub fn epsilon(&self, form: &LinearForm) -> u32 {
        let v = form.value_at(&self.pole.root());
        u32::from((v % BigInt::from(self.divisor)).is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SelmerFunction {
    Linear { form: LinearForm },
    OverPole { form: LinearForm, pole: LinearForm },
    /// `pole^2 / divisor`.
    PoleSquare { pole: LinearForm, divisor: i64 },
}

impl SelmerFunction {
    pub fn linear(form: LinearForm) -> Self {
        SelmerFunction::Linear { form }
    }

    pub fn is_special(&self) -> bool {
        matches!(self, SelmerFunction::PoleSquare { .. })
    }

    pub fn to_ratfunc(&self) -> RatFunction {
        match self {
            SelmerFunction::Linear { form } => RatFunction::from_poly(form.poly()),
            SelmerFunction::OverPole { form, pole } => RatFunction::new(form.poly(), pole.poly()),
            SelmerFunction::PoleSquare { pole, divisor } => RatFunction::with_scale(
                BigRational::new(BigInt::one(), BigInt::from(*divisor)),
                pole.poly().pow(2),
                IntPolynomial::one(),
            ),
        }
    }
}

impl fmt::Display for SelmerFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelmerFunction::Linear { form } => write!(f, "{form}"),
            SelmerFunction::OverPole { form, pole } => write!(f, "({form})/({pole})"),
            SelmerFunction::PoleSquare { pole, divisor } => write!(f, "({pole})^2/{divisor}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NConstraint {
    Any,
    Odd,
    CoprimeTo6,
}

impl NConstraint {
    pub fn allows(self, n: u32) -> bool {
        match self {
            NConstraint::Any => n >= 1,
            NConstraint::Odd => n % 2 == 1,
            NConstraint::CoprimeTo6 => n.gcd(&6) == 1,
        }
    }
}

impl fmt::Display for NConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NConstraint::Any => "any n",
            NConstraint::Odd => "n odd",
            NConstraint::CoprimeTo6 => "n coprime to 6",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResidueRule {
    /// `y ≡ y_res (mod m)` when `n ≡ n_res (mod n_modulus)`.
    ByExponentClass { n_modulus: u64, classes: Vec<(u64, u64)> },
    /// `y^n ≡ t0 (mod m)`.
    PowerResidue { t0: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionLabels {
    pub n: String,
    pub residue: String,
    pub coprime: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCondition {
    pub n_constraint: NConstraint,
    pub modulus: u64,
    pub rule: ResidueRule,
    pub coprime_set: Vec<u64>,
    pub labels: ConditionLabels,
}

/// A failed condition, named by its label in the case table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    pub label: String,
    pub detail: String,
}

/// Multiplicative order of `t` modulo `m`, for `gcd(t, m) = 1`.
pub fn multiplicative_order(t: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if t.gcd(&m) != 1 {
        return None;
    }
    let mut x = t % m;
    let mut k = 1;
    while x != 1 {
        x = mulmod(x, t, m);
        k += 1;
    }
    Some(k)
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

impl CongruenceCondition {
    /// The residue `y0` with `y ≡ y0 (mod m)` required for exponent `n`.
    ///
    /// For a power-residue rule, `y0 = t0^(n^-1 mod d)` with `d` the order of
    /// `t0`; solvable exactly when `gcd(n, d) = 1`.
    pub fn y_residue(&self, n: u32) -> Option<u64> {
        if !self.n_constraint.allows(n) {
            return None;
        }
        match &self.rule {
            ResidueRule::ByExponentClass { n_modulus, classes } => classes
                .iter()
                .find(|(nr, _)| u64::from(n) % n_modulus == *nr)
                .map(|&(_, yr)| yr),
            ResidueRule::PowerResidue { t0 } => {
                let d = multiplicative_order(*t0, self.modulus)?;
                let e = inverse_mod(u64::from(n) % d, d)?;
                Some(powmod(*t0, e, self.modulus))
            }
        }
    }

    pub fn check(&self, y: u64, n: u32) -> Result<(), ConditionFailure> {
        if !self.n_constraint.allows(n) {
            return Err(ConditionFailure {
                label: self.labels.n.clone(),
                detail: format!("{} required, got n = {n}", self.n_constraint),
            });
        }
        let residue_ok = match &self.rule {
            ResidueRule::PowerResidue { t0 } => powmod(y, u64::from(n), self.modulus) == *t0,
            ResidueRule::ByExponentClass { .. } => {
                self.y_residue(n).is_some_and(|y0| y % self.modulus == y0)
            }
        };
        if !residue_ok {
            let want = match (&self.rule, self.y_residue(n)) {
                (ResidueRule::PowerResidue { t0 }, _) => format!("y^n ≡ {t0}"),
                (_, Some(y0)) => format!("y ≡ {y0}"),
                (_, None) => "a residue class".to_string(),
            };
            return Err(ConditionFailure {
                label: self.labels.residue.clone(),
                detail: format!("{want} (mod {}) required, got y = {y}", self.modulus),
            });
        }
        if let Some(p) = self.coprime_set.iter().find(|&&p| y % p == 0) {
            return Err(ConditionFailure {
                label: self.labels.coprime.clone(),
                detail: format!("y = {y} is divisible by {p}"),
            });
        }
        Ok(())
    }

    pub fn admissible(&self, y: u64, n: u32) -> bool {
        self.check(y, n).is_ok()
    }

    /// The first `count` admissible `y ≥ start`, ascending.
    pub fn admissible_ys(&self, n: u32, start: u64, count: usize) -> Vec<u64> {
        let Some(y0) = self.y_residue(n) else {
            return Vec::new();
        };
        let m = self.modulus;
        let first = if start <= y0 { y0 } else { y0 + (start - y0).div_ceil(m) * m };
        (0..)
            .map(|k| first + k * m)
            .filter(|&y| self.admissible(y, n))
            .take(count)
            .collect()
    }

    /// Admissible `y` in `lo..=hi`.
    pub fn admissible_in(&self, n: u32, lo: u64, hi: u64) -> Vec<u64> {
        let Some(y0) = self.y_residue(n) else {
            return Vec::new();
        };
        let m = self.modulus;
        let first = if lo <= y0 { y0 } else { y0 + (lo - y0).div_ceil(m) * m };
        (0..)
            .map(|k| first + k * m)
            .take_while(|&y| y <= hi)
            .filter(|&y| self.admissible(y, n))
            .collect()
    }
}

pub fn case_conditions(id: CaseId) -> CongruenceCondition {
    crate::catalog::case(id).conditions
}

pub fn selmer_functions(id: CaseId) -> Vec<SelmerFunction> {
    crate::catalog::case(id).selmer_functions
}

/// Residues `t mod ∏α_i` for which `A + tB` has all coefficients divisible by `∏α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCongruence {
    pub modulus: BigInt,
    pub residues: Vec<BigInt>,
}

impl BaseCongruence {
    pub fn contains(&self, y_pow: &BigInt) -> bool {
        let r = y_pow.mod_floor(&self.modulus);
        self.residues.contains(&r)
    }
}

pub fn base_congruence(case: &GroupCase) -> Result<BaseCongruence, SelmerError> {
    let curve = build_curve_for(case).map_err(|_| SelmerError::DegenerateOrbit)?;
    base_congruence_of(&curve)
}

pub fn base_congruence_of(curve: &CurveFamily) -> Result<BaseCongruence, SelmerError> {
    let m = curve.alpha_product.clone();
    let bound = m.to_u64().ok_or(SelmerError::NoAdmissibleResidue(curve.case_id))?;
    let residues: Vec<BigInt> = (0..bound)
        .map(BigInt::from)
        .filter(|t| curve.integral_at_residue(t))
        .collect();
    if residues.is_empty() {
        return Err(SelmerError::NoAdmissibleResidue(curve.case_id));
    }
    Ok(BaseCongruence { modulus: m, residues })
}

/// `λ^{-1} Σ_{σ∈G} σ(a)` reduced modulo `∏α_i`, when it is an integer.
///
/// Informational: the operational residue from [`base_congruence`] is the one
/// enforced, and the two differ in sign for several cases.
pub fn trace_formula_residue(case: &GroupCase) -> Option<BigInt> {
    let g = case.group();
    let curve = build_curve_for(case).ok()?;
    let sum: BigRational = g
        .elements()
        .iter()
        .map(|s| s.apply(&case.a).to_rational())
        .sum::<Option<BigRational>>()?;
    let v = sum / &curve.lambda;
    v.is_integer().then(|| v.to_integer().mod_floor(&curve.alpha_product))
}

/// `∏_{i<j} |α_i β_j - β_i α_j| / gcd(α_i, α_j)` and its prime support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdBound {
    pub value: BigInt,
    pub primes: Vec<u64>,
}

pub fn pairwise_gcd_bound(points: &[ProjPoint]) -> Result<GcdBound, SelmerError> {
    let distinct: BTreeSet<&ProjPoint> = points.iter().collect();
    if distinct.len() != points.len() || points.iter().any(ProjPoint::is_infinity) {
        return Err(SelmerError::DegenerateOrbit);
    }
    let mut value = BigInt::one();
    let mut primes = BTreeSet::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let det = (p.den() * q.num() - p.num() * q.den()).abs();
            let term = det / p.den().gcd(q.den());
            primes.extend(prime_support(&term));
            value *= term;
        }
    }
    Ok(GcdBound { value, primes: primes.into_iter().collect() })
}

/// Prime divisors by trial division; inputs here are small.
pub fn prime_support(v: &BigInt) -> Vec<u64> {
    let mut n = v.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("trial division leaves a small cofactor"));
    }
    out
}

/// The functions produced by the construction before one is dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFunctions {
    pub phis: Vec<SelmerFunction>,
    pub psis: Vec<SelmerFunction>,
    pub eps_phi: u32,
    pub eps_psi: u32,
    pub special: Option<SelmerFunction>,
}

fn divided(form: LinearForm, pole: Option<&UnitPole>) -> (SelmerFunction, u32) {
    match pole {
        Some(up) if up.epsilon(&form) == 1 => {
            (SelmerFunction::OverPole { form, pole: up.pole }, 1)
        }
        _ => (SelmerFunction::linear(form), 0),
    }
}

/// φ's from `orb(0) \ {∞, pole}` and ψ's from `orb(a)`, each divided by the
/// pole when the divisor divides its value there.
pub fn derive_functions(case: &GroupCase) -> Result<DerivedFunctions, SelmerError> {
    let g = case.group();
    let pole = case.unit_pole.as_ref();
    let pole_point = pole.map(|u| u.pole.root());
    let mut phis = Vec::new();
    let mut eps_phi = 0;
    for p in orbit(&g, &ProjPoint::zero()) {
        if p.is_infinity() || Some(&p) == pole_point.as_ref() {
            continue;
        }
        let form = LinearForm::from_point(&p).ok_or(SelmerError::DegenerateOrbit)?;
        let (f, e) = divided(form, pole);
        phis.push(f);
        eps_phi += e;
    }
    let mut psis = Vec::new();
    let mut eps_psi = 0;
    for p in orbit(&g, &case.a) {
        let form = LinearForm::from_point(&p).ok_or(SelmerError::DegenerateOrbit)?;
        let (f, e) = divided(form, pole);
        psis.push(f);
        eps_psi += e;
    }
    let special = pole.map(|u| SelmerFunction::PoleSquare { pole: u.pole, divisor: u.divisor });
    Ok(DerivedFunctions { phis, psis, eps_phi, eps_psi, special })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub case_id: CaseId,
    /// `∏ψ_i · pole^{Σε_ψ} = A`.
    pub psi_product_is_a: bool,
    /// `∏φ_j^ω · pole^{ω(1 + Σε_φ)} = B`.
    pub phi_product_is_b: bool,
    pub eps_psi: u32,
    pub eps_expected: u32,
    /// The catalog list is the derived list minus exactly one function, plus the
    /// last function when there is a pole.
    pub list_matches: bool,
    pub dropped: Vec<SelmerFunction>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.psi_product_is_a
            && self.phi_product_is_b
            && self.eps_psi == self.eps_expected
            && self.list_matches
    }
}

/// Checks `∏ψ_i = -Y ∏φ_j^ω` on the curve `A + Y B = 0` by comparing both sides
/// with `A` and `B` after restoring the removed pole powers.
pub fn verify_function_relation(case: &GroupCase) -> Result<RelationReport, SelmerError> {
    let curve = build_curve_for(case).map_err(|_| SelmerError::DegenerateOrbit)?;
    let d = derive_functions(case)?;
    let omega = curve.omega;
    let pole = case
        .unit_pole
        .map(|u| RatFunction::from_poly(u.pole.poly()))
        .unwrap_or_else(RatFunction::one);
    // Without a pole the phi list also contains the pole-free form x + 1 as is.
    let pole_in_b = if case.unit_pole.is_some() { 1 } else { 0 };
    let eps_expected = omega * (pole_in_b + d.eps_phi);

    let psi_prod: RatFunction = d.psis.iter().map(SelmerFunction::to_ratfunc).product();
    let lhs = &psi_prod * &pole.pow(d.eps_psi);
    let psi_product_is_a = lhs == RatFunction::from_poly(curve.a_poly.clone());

    let phi_prod: RatFunction = d.phis.iter().map(|f| f.to_ratfunc().pow(omega)).product();
    let rhs = &phi_prod * &pole.pow(eps_expected);
    let phi_product_is_b = rhs == RatFunction::from_poly(curve.b_poly.clone());

    let derived: BTreeSet<SelmerFunction> = d.phis.iter().chain(&d.psis).cloned().collect();
    let listed: BTreeSet<SelmerFunction> =
        case.selmer_functions.iter().filter(|f| !f.is_special()).cloned().collect();
    let dropped: Vec<SelmerFunction> = derived.difference(&listed).cloned().collect();
    let special_ok = match &d.special {
        Some(s) => case.selmer_functions.iter().filter(|f| f.is_special()).eq([s]),
        None => !case.selmer_functions.iter().any(SelmerFunction::is_special),
    };
    let list_matches = listed.is_subset(&derived)
        && dropped.len() == 1
        && listed.len() == case.selmer_functions.iter().filter(|f| !f.is_special()).count()
        && special_ok;

    Ok(RelationReport {
        case_id: case.id,
        psi_product_is_a,
        phi_product_is_b,
        eps_psi: d.eps_psi,
        eps_expected,
        list_matches,
        dropped,
    })
}

/// `(-1)^d α^d P(β/α) = ∏(α x_k - β)` for monic `P`.
fn norm_of_form(p: &IntPolynomial, form: &LinearForm) -> BigInt {
    let d = p.degree().unwrap_or(0);
    let v = p.eval_homogeneous(&form.beta.into(), &form.alpha.into());
    if d % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Field norm of `g` at a root of the monic polynomial `P`.
pub fn norm_of_function(p: &IntPolynomial, g: &SelmerFunction) -> Result<BigRational, SelmerError> {
    if p.is_zero() || !p.leading().is_one() {
        return Err(SelmerError::BadPolynomial);
    }
    let d = p.degree().unwrap_or(0);
    match g {
        SelmerFunction::Linear { form } => Ok(BigRational::from_integer(norm_of_form(p, form))),
        SelmerFunction::OverPole { form, pole } => {
            let den = norm_of_form(p, pole);
            if den.is_zero() {
                return Err(SelmerError::PoleAtRoot);
            }
            Ok(BigRational::new(norm_of_form(p, form), den))
        }
        SelmerFunction::PoleSquare { pole, divisor } => {
            let r = norm_of_form(p, pole);
            Ok(BigRational::new(&r * &r, BigInt::from(*divisor).pow(d as u32)))
        }
    }
}

/// `v = ±w^n` with `w ≥ 0`; for even `n` only `+w^n`.
pub fn is_signed_nth_power(v: &BigInt, n: u32) -> bool {
    if n == 0 {
        return v.is_one();
    }
    if v.is_negative() && n % 2 == 0 {
        return false;
    }
    let a = v.abs();
    let w = a.nth_root(n);
    Pow::pow(&w, n) == a
}

pub fn is_signed_nth_power_rational(v: &BigRational, n: u32) -> bool {
    is_signed_nth_power(v.numer(), n) && is_signed_nth_power(v.denom(), n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormEntry {
    pub function: SelmerFunction,
    pub norm: BigRational,
    pub nth_power: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelmerReport {
    pub case_id: CaseId,
    pub y: u64,
    pub n: u32,
    pub entries: Vec<NormEntry>,
    /// Monic characteristic polynomial of the last function, when the case has one.
    pub special_charpoly: Option<RatPolynomial>,
}

impl SelmerReport {
    pub fn norms_pass(&self) -> bool {
        self.entries.iter().all(|e| e.nth_power)
    }

    /// The last function is integral with constant term ±1.
    pub fn special_is_unit(&self) -> bool {
        self.special_charpoly.as_ref().is_none_or(|c| {
            c.is_integral() && c.coeff(0).abs().is_one()
        })
    }

    pub fn passed(&self) -> bool {
        self.norms_pass() && self.special_is_unit()
    }
}

pub fn y_power(y: u64, n: u32) -> BigInt {
    Pow::pow(&BigInt::from(y), n)
}

/// Checks each listed function's norm at the specialization and the unit
/// property of the last one.
pub fn check_selmer_necessary(case: &GroupCase, y: u64, n: u32) -> Result<SelmerReport, SelmerError> {
    case.conditions.check(y, n).map_err(|f| SelmerError::ConditionFailed {
        case: case.id,
        condition: f.label,
        detail: f.detail,
    })?;
    let curve = build_curve_for(case).map_err(|_| SelmerError::DegenerateOrbit)?;
    let p = curve.monic_at(&y_power(y, n)).ok_or(SelmerError::NotIntegral(case.id))?;
    let mut entries = Vec::with_capacity(case.selmer_functions.len());
    let mut special_charpoly = None;
    for g in &case.selmer_functions {
        let norm = norm_of_function(&p, g)?;
        let nth_power = is_signed_nth_power_rational(&norm, n);
        if g.is_special() {
            special_charpoly = Some(charpoly(&p.to_rational(), &g.to_ratfunc())?);
        }
        entries.push(NormEntry { function: g.clone(), norm, nth_power });
    }
    Ok(SelmerReport { case_id: case.id, y, n, entries, special_charpoly })
}

/// Monic characteristic polynomial of `g(θ)` over `Q` for `θ` a root of `P`:
/// `Res_x(P, den(g) T - num(g)) / Res_x(P, den(g))`, interpolated in `T`.
pub fn charpoly(p: &RatPolynomial, g: &RatFunction) -> Result<RatPolynomial, SelmerError> {
    if p.is_zero() || p.is_constant() {
        return Err(SelmerError::BadPolynomial);
    }
    let p = p.monic();
    let d = p.degree().unwrap_or(0);
    let (num, den) = g.to_fraction();
    let num = num.to_rational();
    let den = den.to_rational();
    let norm_den = resultant(&p, &den);
    if norm_den.is_zero() {
        return Err(SelmerError::PoleAtRoot);
    }
    let pts: Vec<(BigRational, BigRational)> = (0..=d)
        .map(|k| {
            let t = BigRational::from_integer(BigInt::from(k as i64));
            let q = &den.scale(&t) - &num;
            let v = resultant(&p, &q) / &norm_den;
            (t, v)
        })
        .collect();
    Ok(RatPolynomial::interpolate(&pts))
}

/// A characteristic polynomial with its factorization as a power of the
/// minimal polynomial, when it is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    /// Content-1 integral form with positive leading coefficient.
    pub charpoly: IntPolynomial,
    pub minimal: IntPolynomial,
    /// `charpoly = minimal^multiplicity` up to a constant; `None` when it is not
    /// a pure power (reducible `P`).
    pub multiplicity: Option<usize>,
}

impl MinimalPolynomial {
    pub fn separates_roots(&self) -> bool {
        self.multiplicity == Some(1)
    }
}

pub fn minimal_polynomial(p: &IntPolynomial, g: &RatFunction) -> Result<MinimalPolynomial, SelmerError> {
    if p.is_zero() || !p.is_squarefree() {
        return Err(SelmerError::BadPolynomial);
    }
    let cp = charpoly(&p.to_rational(), g)?;
    let (charpoly, _) = cp.to_primitive_int();
    let charpoly = charpoly.primitive();
    let g2 = charpoly.gcd(&charpoly.derivative());
    let minimal = if g2.is_constant() {
        charpoly.clone()
    } else {
        charpoly.div_exact(&g2).expect("gcd divides").primitive()
    };
    let dm = minimal.degree().unwrap_or(0);
    let dc = charpoly.degree().unwrap_or(0);
    let multiplicity = (dm > 0 && dc % dm == 0)
        .then(|| dc / dm)
        .filter(|&k| minimal.pow(k as u32).primitive() == charpoly);
    Ok(MinimalPolynomial { charpoly, minimal, multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{case, catalog};

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn base_congruences() {
        let c2 = base_congruence(&case(CaseId::C2)).unwrap();
        assert_eq!((c2.modulus.clone(), c2.residues.clone()), (2.into(), vec![1.into()]));
        let c3 = base_congruence(&case(CaseId::C3)).unwrap();
        assert_eq!(c3.residues, vec![BigInt::from(1)]);
        let c4 = base_congruence(&case(CaseId::C4)).unwrap();
        assert_eq!((c4.modulus.clone(), c4.residues.clone()), (6.into(), vec![5.into()]));
    }

    #[test]
    fn trace_formula_differs_in_sign_for_c4() {
        assert_eq!(trace_formula_residue(&case(CaseId::C4)), Some(BigInt::from(1)));
    }

    #[test]
    fn gcd_bounds() {
        let pts = [ProjPoint::integer(2), ProjPoint::from_i64(1, 2).unwrap()];
        let b = pairwise_gcd_bound(&pts).unwrap();
        assert_eq!((b.value, b.primes), (BigInt::from(3), vec![3]));
        let d2 = [
            ProjPoint::integer(2),
            ProjPoint::integer(3),
            ProjPoint::from_i64(-1, 2).unwrap(),
            ProjPoint::from_i64(-1, 3).unwrap(),
        ];
        assert_eq!(pairwise_gcd_bound(&d2).unwrap().primes, vec![2, 5, 7]);
        let single = pairwise_gcd_bound(&[ProjPoint::integer(1)]).unwrap();
        assert_eq!((single.value, single.primes), (BigInt::one(), vec![]));
        assert!(pairwise_gcd_bound(&[ProjPoint::integer(1), ProjPoint::integer(1)]).is_err());
    }

    #[test]
    fn norms_at_c2_example() {
        let p = ip(&[1, 8401, 1]);
        let x_minus_2 = SelmerFunction::linear(LinearForm::new(1, 2));
        assert_eq!(norm_of_function(&p, &x_minus_2).unwrap(), BigRational::from_integer(16807.into()));
        let x = SelmerFunction::linear(LinearForm::new(1, 0));
        assert_eq!(norm_of_function(&p, &x).unwrap(), BigRational::one());
    }

    #[test]
    fn signed_powers() {
        assert!(is_signed_nth_power(&BigInt::from(-32), 5));
        assert!(!is_signed_nth_power(&BigInt::from(-16), 4));
        assert!(is_signed_nth_power(&BigInt::from(16), 4));
        assert!(!is_signed_nth_power(&BigInt::from(17), 1 + 1));
        assert!(is_signed_nth_power(&BigInt::from(17), 1));
    }

    #[test]
    fn y_residues_for_power_rule() {
        let d6 = case_conditions(CaseId::D6);
        for n in [1u32, 5, 7, 11, 13] {
            let y0 = d6.y_residue(n).unwrap();
            assert_eq!(powmod(y0, n.into(), d6.modulus), 117_649, "n = {n}");
        }
        assert_eq!(d6.y_residue(3), None);
    }

    #[test]
    fn condition_labels_name_the_failure() {
        let c2 = case_conditions(CaseId::C2);
        assert_eq!(c2.check(6, 5).unwrap_err().label, "i");
        let c4 = case_conditions(CaseId::C4);
        assert_eq!(c4.check(17, 2).unwrap_err().label, "i");
        assert_eq!(c4.check(6, 3).unwrap_err().label, "ii");
        assert_eq!(c4.check(5, 3).unwrap_err().label, "iii");
        assert!(c4.check(17, 3).is_ok());
    }

    #[test]
    fn admissible_enumeration() {
        let c2 = case_conditions(CaseId::C2);
        assert_eq!(c2.admissible_ys(5, 1, 5), vec![1, 5, 7, 11, 13]);
        assert_eq!(c2.admissible_ys(5, 6, 2), vec![7, 11]);
        assert_eq!(c2.admissible_in(5, 2, 10), vec![5, 7]);
    }

    #[test]
    fn relation_holds_for_catalog() {
        for c in catalog() {
            let r = verify_function_relation(&c).unwrap();
            assert!(r.holds(), "{}: {r:?}", c.id);
        }
    }

    #[test]
    fn eps_sums() {
        let sums: Vec<(CaseId, u32)> = catalog()
            .iter()
            .map(|c| (c.id, verify_function_relation(c).unwrap().eps_psi))
            .collect();
        assert_eq!(
            sums,
            vec![
                (CaseId::C2, 0),
                (CaseId::C3, 0),
                (CaseId::C4, 2),
                (CaseId::C6, 3),
                (CaseId::D2, 2),
                (CaseId::D3, 0),
                (CaseId::D4, 4),
                (CaseId::D6, 6),
            ]
        );
    }

    #[test]
    fn c4_minimal_polynomial_at_q1() {
        // y = 17, n = 1: q = (17 - 5)/12 = 1. The T coefficient is -2(q^2 + 3q + 6).
        let p = build_curve_for(&case(CaseId::C4)).unwrap().monic_at(&BigInt::from(17)).unwrap();
        let g = case(CaseId::C4).selmer_functions.last().unwrap().to_ratfunc();
        let m = minimal_polynomial(&p, &g).unwrap();
        assert_eq!(m.charpoly, ip(&[1, -20, 34, -12, 1]));
        assert!(m.separates_roots());
    }

    #[test]
    fn minimal_polynomial_of_x_is_p() {
        let p = ip(&[1, 8401, 1]);
        let m = minimal_polynomial(&p, &RatFunction::x()).unwrap();
        assert_eq!(m.charpoly, p);
    }
}
