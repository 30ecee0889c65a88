use std::fmt;
use std::ops::{Add, Div, Mul};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::moebius::Homography;
use crate::poly::{IntPolynomial, RatPolynomial};

/// An element of Q(x) in canonical form `scale * num / den`.
///
/// `num` and `den` are primitive integer polynomials with positive leading
/// coefficients and no common factor; the rational `scale` carries the
/// constant that content normalization would otherwise discard. The zero
/// function has `scale = 0` and `num = den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunction {
    scale: BigRational,
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RatFunction {
    /// Builds `num / den` and reduces it.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        Self::with_scale(BigRational::one(), num, den)
    }

    pub fn with_scale(scale: BigRational, num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() || scale.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let num = if g.is_constant() { num } else { num.div_exact(&g).expect("gcd divides") };
        let den = if g.is_constant() { den } else { den.div_exact(&g).expect("gcd divides") };
        let n_prim = num.primitive();
        let d_prim = den.primitive();
        // num = n_factor * n_prim and likewise for den.
        let n_factor = BigRational::new(num.leading(), n_prim.leading());
        let d_factor = BigRational::new(den.leading(), d_prim.leading());
        RatFunction {
            scale: scale * n_factor / d_factor,
            num: n_prim,
            den: d_prim,
        }
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one())
    }

    pub fn from_rat_poly(p: &RatPolynomial) -> Self {
        let (prim, c) = p.to_primitive_int();
        Self::with_scale(c, prim, IntPolynomial::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::with_scale(c, IntPolynomial::one(), IntPolynomial::one())
    }

    pub fn zero() -> Self {
        RatFunction {
            scale: BigRational::zero(),
            num: IntPolynomial::one(),
            den: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        Self::from_poly(IntPolynomial::x())
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    /// The value of a constant function.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.scale.clone())
    }

    /// Numerator and denominator over Z with all constants folded in:
    /// `self = num / den` with `den` primitive and positive-leading.
    pub fn to_fraction(&self) -> (IntPolynomial, IntPolynomial) {
        let n = self.num.scale(self.scale.numer());
        let d = self.den.scale(self.scale.denom());
        (n, d)
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero function");
        RatFunction {
            scale: self.scale.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Degree as a map P^1 -> P^1: `max(deg num, deg den)`.
    pub fn map_degree(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// `self(h(x))` for a homography `h`.
    pub fn compose_homography(&self, h: &Homography) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (p, q, r, s) = h.entries();
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        // num(h x) = N(px+q, rx+s) / (rx+s)^dn, likewise for den.
        let n = self.num.homogeneous_substitute(p, q, r, s, dn);
        let d = self.den.homogeneous_substitute(p, q, r, s, dd);
        let lin = IntPolynomial::new(vec![s.clone(), r.clone()]);
        let (n, d) = if dd >= dn {
            (&n * &lin.pow((dd - dn) as u32), d)
        } else {
            (n, &d * &lin.pow((dn - dd) as u32))
        };
        Self::with_scale(self.scale.clone(), n, d)
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.scale * self.num.eval_rational(x) / d)
    }
}

impl Mul for &RatFunction {
    type Output = RatFunction;
    fn mul(self, rhs: &RatFunction) -> RatFunction {
        RatFunction::with_scale(
            &self.scale * &rhs.scale,
            &self.num * &rhs.num,
            &self.den * &rhs.den,
        )
    }
}

impl Div for &RatFunction {
    type Output = RatFunction;
    fn div(self, rhs: &RatFunction) -> RatFunction {
        self * &rhs.inverse()
    }
}

impl Add for &RatFunction {
    type Output = RatFunction;
    fn add(self, rhs: &RatFunction) -> RatFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (n1, d1) = self.to_fraction();
        let (n2, d2) = rhs.to_fraction();
        let num = &(&n1 * &d2) + &(&n2 * &d1);
        if num.is_zero() {
            return RatFunction::zero();
        }
        RatFunction::new(num, &d1 * &d2)
    }
}

impl std::iter::Product for RatFunction {
    fn product<I: Iterator<Item = RatFunction>>(iter: I) -> Self {
        iter.fold(RatFunction::one(), |acc, f| &acc * &f)
    }
}

impl fmt::Display for RatFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let s = &self.scale;
        let prefix = if s.is_one() {
            String::new()
        } else if (-s).is_one() {
            "-".to_string()
        } else if s.is_negative() {
            format!("-({})*", s.abs())
        } else {
            format!("({s})*")
        };
        if self.den.is_constant() {
            write!(f, "{prefix}({})", self.num)
        } else {
            write!(f, "{prefix}({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunction[{self}]")
    }
}
