//! The Galois cover `h_{a,b}` of the projective line attached to a finite
//! group, the generic polynomial `R_t` and the integral curve family
//! `A(x) + Y B(x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::catalog::{CaseId, GroupCase};
use crate::error::CoverError;
use crate::moebius::{orbit, stabilizer_order, FiniteSubgroup, ProjPoint};
use crate::poly::{AffineFamily, IntPolynomial, RatPolynomial};
use crate::ratfunc::RatFunction;

/// `x - p` as a rational polynomial, with `x - ∞ = 1`.
fn monic_factor(p: &ProjPoint) -> RatPolynomial {
    match p.to_rational() {
        None => RatPolynomial::one(),
        Some(v) => RatPolynomial::new(vec![-v, BigRational::one()]),
    }
}

/// `den * x - num`, the primitive integral form of `x - p`; `1` at ∞.
pub fn integral_factor(p: &ProjPoint) -> IntPolynomial {
    if p.is_infinity() {
        IntPolynomial::one()
    } else {
        IntPolynomial::linear(p.den().clone(), p.num().clone())
    }
}

fn disjoint_orbits(g: &FiniteSubgroup, a: &ProjPoint, b: &ProjPoint) -> Result<(), CoverError> {
    if orbit(g, a).contains(b) {
        return Err(CoverError::SameOrbit { a: a.to_string(), b: b.to_string() });
    }
    Ok(())
}

/// `∏_{σ∈G} (x - σ(p))`, one factor per group element.
fn orbit_product(g: &FiniteSubgroup, p: &ProjPoint) -> RatPolynomial {
    g.elements().iter().map(|s| monic_factor(&s.apply(p))).product()
}

/// `h(x) = ∏_{σ∈G} (x - σ(a)) / (x - σ(b))`, kept with its exact constant.
pub fn build_h(g: &FiniteSubgroup, a: &ProjPoint, b: &ProjPoint) -> Result<RatFunction, CoverError> {
    disjoint_orbits(g, a, b)?;
    let num = RatFunction::from_rat_poly(&orbit_product(g, a));
    let den = RatFunction::from_rat_poly(&orbit_product(g, b));
    Ok(&num / &den)
}

/// `R_t = ∏(x - σ(a)) - t ∏(x - σ(b))` as a family affine in `t`.
pub fn build_rt(
    g: &FiniteSubgroup,
    a: &ProjPoint,
    b: &ProjPoint,
) -> Result<AffineFamily<BigRational>, CoverError> {
    disjoint_orbits(g, a, b)?;
    Ok(AffineFamily::new(orbit_product(g, a), -orbit_product(g, b)))
}

/// `λ = -(∏γ_j)^ω / ∏α_i` with `β_i/α_i` running over `orb(a)` and
/// `δ_j/γ_j` over `orb(0) \ {∞}`.
pub fn compute_lambda(g: &FiniteSubgroup, a: &ProjPoint) -> Result<BigRational, CoverError> {
    let zero = ProjPoint::zero();
    let orb0 = orbit(g, &zero);
    if !orb0.iter().any(ProjPoint::is_infinity) {
        return Err(CoverError::InfinityNotInBaseOrbit);
    }
    let orba = orbit(g, a);
    if orba.iter().any(ProjPoint::is_infinity) {
        return Err(CoverError::InfinityInNumeratorOrbit);
    }
    disjoint_orbits(g, a, &zero)?;
    let omega = stabilizer_order(g, &zero) as u32;
    let alpha: BigInt = orba.iter().map(|p| p.den().clone()).product();
    let gamma: BigInt = orb0.iter().filter(|p| !p.is_infinity()).map(|p| p.den().clone()).product();
    Ok(-BigRational::new(num_traits::pow(gamma, omega as usize), alpha))
}

/// `#orb(a) + #orb(b) - 2`, the rank of the n-torsion Picard subgroup.
pub fn rank_count(g: &FiniteSubgroup, a: &ProjPoint, b: &ProjPoint) -> usize {
    orbit(g, a).len() + orbit(g, b).len() - 2
}

/// `A(x) + Y B(x)` with `A = ∏(α_i x - β_i)` and `B = ∏(γ_j x - δ_j)^ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub case_id: CaseId,
    pub a_poly: IntPolynomial,
    pub b_poly: IntPolynomial,
    pub omega: u32,
    pub lambda: BigRational,
    /// `∏α_i`, the leading coefficient of `A`.
    pub alpha_product: BigInt,
}

impl CurveFamily {
    pub fn family(&self) -> AffineFamily<BigInt> {
        AffineFamily::new(self.a_poly.clone(), self.b_poly.clone())
    }

    /// `(A + Y B) / ∏α_i`, monic in `x`.
    pub fn monic_family(&self) -> AffineFamily<BigRational> {
        let inv = BigRational::new(BigInt::one(), self.alpha_product.clone());
        self.family().to_rational().scale(&inv)
    }

    pub fn degree(&self) -> usize {
        self.a_poly.degree().unwrap_or(0)
    }

    pub fn at(&self, y_pow: &BigInt) -> IntPolynomial {
        self.family().at(y_pow)
    }

    /// The monic specialization, when it has integer coefficients.
    pub fn monic_at(&self, y_pow: &BigInt) -> Option<IntPolynomial> {
        self.at(y_pow).div_scalar_exact(&self.alpha_product)
    }

    /// Whether `A + t B ≡ 0 (mod ∏α_i)` coefficientwise.
    pub fn integral_at_residue(&self, t: &BigInt) -> bool {
        let m = &self.alpha_product;
        let d = self.degree();
        (0..=d).all(|i| {
            let c = self.a_poly.coeff(i) + t * self.b_poly.coeff(i);
            (c % m).is_zero()
        })
    }
}

/// Builds the curve family of a group with `b = 0`.
pub fn build_curve_from(
    case_id: CaseId,
    g: &FiniteSubgroup,
    a: &ProjPoint,
) -> Result<CurveFamily, CoverError> {
    let lambda = compute_lambda(g, a)?;
    let zero = ProjPoint::zero();
    let omega = stabilizer_order(g, &zero) as u32;
    let orba = orbit(g, a);
    let a_poly: IntPolynomial = orba.iter().map(integral_factor).product();
    let b_poly: IntPolynomial = orbit(g, &zero)
        .iter()
        .filter(|p| !p.is_infinity())
        .map(|p| integral_factor(p).pow(omega))
        .product();
    let alpha_product = a_poly.leading();
    Ok(CurveFamily { case_id, a_poly, b_poly, omega, lambda, alpha_product })
}

pub fn build_curve_for(case: &GroupCase) -> Result<CurveFamily, CoverError> {
    build_curve_from(case.id, &case.group(), &case.a)
}

pub fn build_curve(id: CaseId) -> CurveFamily {
    build_curve_for(&crate::catalog::case(id)).expect("catalog cases have disjoint orbits")
}

/// The family in factored layout, `(1/∏α)(∏(αx - β) + y^n ∏(γx - δ)^ω)`,
/// one factor per orbit point.
pub fn factored_display(case: &GroupCase) -> Result<String, CoverError> {
    let curve = build_curve_for(case)?;
    let g = case.group();
    let factor = |p: &ProjPoint| {
        let f = integral_factor(p).display_in("x").replace([' ', '*'], "");
        if f == "x" {
            f
        } else {
            format!("({f})")
        }
    };
    let a: String = orbit(&g, &case.a).iter().map(factor).collect();
    let power = if curve.omega > 1 { format!("^{}", curve.omega) } else { String::new() };
    let b: String = orbit(&g, &ProjPoint::zero())
        .iter()
        .filter(|p| !p.is_infinity())
        .map(|p| format!("{}{power}", factor(p)))
        .collect();
    let body = format!("{a} + y^n {b}");
    Ok(if curve.alpha_product.is_one() { body } else { format!("(1/{})({body})", curve.alpha_product) })
}

/// Checks `∏σ(z) = 1` and that `∏(σ(z) + 1)` is constant; returns that constant.
pub fn verify_orbit_identities(g: &FiniteSubgroup) -> Result<BigRational, CoverError> {
    if g.exponent_max() < 3 {
        return Err(CoverError::NoRotation);
    }
    let z = RatFunction::x();
    let images: Vec<RatFunction> = g.elements().iter().map(|s| z.compose_homography(s)).collect();
    let prod: RatFunction = images.iter().cloned().product();
    if prod != RatFunction::one() {
        return Err(CoverError::IdentityFailed(format!("product of images is {prod}, not 1")));
    }
    let shifted: RatFunction = images.iter().map(|f| f + &RatFunction::one()).product();
    shifted
        .as_constant()
        .ok_or_else(|| CoverError::IdentityFailed(format!("product of shifted images is {shifted}")))
}

/// `h(τ(x)) = h(x)` for every `τ ∈ G`.
pub fn verify_cover_invariance(
    g: &FiniteSubgroup,
    a: &ProjPoint,
    b: &ProjPoint,
) -> Result<bool, CoverError> {
    let h = build_h(g, a, b)?;
    Ok(g.elements().iter().all(|t| h.compose_homography(t) == h))
}

/// Rational roots of a primitive integral polynomial among the given candidates,
/// with multiplicity.
pub fn root_multiplicity(p: &IntPolynomial, at: &ProjPoint) -> usize {
    let f = integral_factor(at);
    let mut q = p.clone();
    let mut k = 0;
    while !q.is_zero() {
        match q.div_exact(&f) {
            Some(next) => {
                q = next;
                k += 1;
            }
            None => break,
        }
    }
    k
}

/// Sign-normalized leading coefficient check shared by tests and reports.
pub fn has_positive_leading(p: &IntPolynomial) -> bool {
    p.leading().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::moebius::{generate_group, Homography};

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn inversion_cover() {
        let g = generate_group(&[Homography::from_i64(0, 1, 1, 0).unwrap()], 24).unwrap();
        let h = build_h(&g, &ProjPoint::integer(2), &ProjPoint::zero()).unwrap();
        // (x-2)(x-1/2)/x = (x-2)(2x-1) / (2x)
        assert_eq!(h.numerator(), &ip(&[2, -5, 2]));
        assert_eq!(h.denominator(), &ip(&[0, 1]));
        assert_eq!(h.scale(), &BigRational::new(1.into(), 2.into()));
        assert!(verify_cover_invariance(&g, &ProjPoint::integer(2), &ProjPoint::zero()).unwrap());
    }

    #[test]
    fn trivial_group_cover() {
        let g = generate_group(&[], 24).unwrap();
        let h = build_h(&g, &ProjPoint::integer(1), &ProjPoint::zero()).unwrap();
        assert_eq!(h, RatFunction::new(ip(&[-1, 1]), ip(&[0, 1])));
    }

    #[test]
    fn same_orbit_rejected() {
        let g = generate_group(&[Homography::from_i64(0, 1, 1, 0).unwrap()], 24).unwrap();
        assert!(matches!(
            build_h(&g, &ProjPoint::integer(2), &ProjPoint::from_i64(1, 2).unwrap()),
            Err(CoverError::SameOrbit { .. })
        ));
    }

    #[test]
    fn lambda_values() {
        let want = [(CaseId::C2, 2), (CaseId::C4, 6), (CaseId::D2, 6), (CaseId::D3, 36)];
        for (id, den) in want {
            let c = crate::catalog::case(id);
            let l = compute_lambda(&c.group(), &c.a).unwrap();
            assert_eq!(l, BigRational::new((-1).into(), den.into()), "{id}");
        }
    }

    #[test]
    fn curve_invariants() {
        for c in catalog() {
            let curve = build_curve_for(&c).unwrap();
            let g = c.group();
            assert_eq!(curve.a_poly.content(), BigInt::one());
            assert_eq!(curve.b_poly.content(), BigInt::one());
            assert!(has_positive_leading(&curve.a_poly) && has_positive_leading(&curve.b_poly));
            assert!(curve.a_poly.gcd(&curve.b_poly).is_constant());
            let orb0 = orbit(&g, &ProjPoint::zero());
            assert_eq!(curve.degree(), orbit(&g, &c.a).len());
            assert_eq!(curve.b_poly.degree().unwrap() as u32, curve.omega * (orb0.len() as u32 - 1));
            for p in orbit(&g, &c.a) {
                assert_eq!(root_multiplicity(&curve.a_poly, &p), 1);
            }
            for p in orb0.iter().filter(|p| !p.is_infinity()) {
                assert_eq!(root_multiplicity(&curve.b_poly, p), curve.omega as usize);
            }
            let a0 = BigRational::new(curve.a_poly.coeff(0), curve.alpha_product.clone());
            assert_eq!(a0.abs(), BigRational::one(), "{}", c.id);
        }
    }

    #[test]
    fn rt_specializes_to_monic_family() {
        for c in catalog() {
            let g = c.group();
            let curve = build_curve_for(&c).unwrap();
            let rt = build_rt(&g, &c.a, &ProjPoint::zero()).unwrap();
            let y = BigRational::from_integer(BigInt::from(11));
            let t = &curve.lambda * &y;
            assert_eq!(rt.at(&t), curve.monic_family().at(&y), "{}", c.id);
        }
    }
}
