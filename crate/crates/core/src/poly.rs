//! Dense univariate polynomials over Z and Q.
//!
//! Coefficients are stored constant term first with no trailing zeros; the
//! zero polynomial has an empty coefficient vector. Generic arithmetic lives on
//! [`Poly<T>`]; ring-specific operations (content, pseudo-remainders, exact
//! division) are on [`IntPolynomial`], field operations (division with
//! remainder, interpolation) on [`RatPolynomial`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient rings usable in [`Poly`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Signed {}

impl<T: Clone + PartialEq + fmt::Debug + fmt::Display + Signed> Coefficient for T {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Poly<BigInt>;
pub type RatPolynomial = Poly<BigRational>;

impl<T: Coefficient> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The linear form `alpha*x - beta`.
    pub fn linear(alpha: T, beta: T) -> Self {
        Self::new(vec![-beta, alpha])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut k = T::zero();
                for _ in 0..i {
                    k = k + T::one();
                }
                c.clone() * k
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reverse the coefficient list: `x^d P(1/x)` for `d = deg P`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Formats the polynomial in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = abs.is_one();
            match i {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !unit {
                        let s = abs.to_string();
                        if s.contains('/') {
                            out.push_str(&format!("({s})*"));
                        } else {
                            out.push_str(&format!("{s}*"));
                        }
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl<T: Coefficient> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<T: Coefficient> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<T: Coefficient> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coefficient> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coefficient> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Coefficient> std::iter::Product for Poly<T> {
    fn product<I: Iterator<Item = Poly<T>>>(iter: I) -> Self {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

fn int_gcd_all<'a>(it: impl Iterator<Item = &'a BigInt>) -> BigInt {
    it.fold(BigInt::zero(), |g, c| g.gcd(c))
}

impl IntPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        int_gcd_all(self.coeffs.iter())
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact quotient `self / d` if `d` divides `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Exact division of every coefficient by `c`, if possible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`, computed in Z[x].
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < dd {
            return self.clone();
        }
        let lc = d.leading();
        let mut pending = da - dd + 1;
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let top = rem.leading();
            let shifted = &IntPolynomial::monomial(top, dr - dd) * d;
            rem = &rem.scale(&lc) - &shifted;
            pending -= 1;
        }
        for _ in 0..pending {
            rem = rem.scale(&lc);
        }
        rem
    }

    /// Greatest common divisor in Z[x], primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let content = self.content().gcd(&other.content());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        let g = a.primitive();
        if g.is_constant() {
            IntPolynomial::constant(content)
        } else {
            g.scale(&content)
        }
    }

    /// True iff `gcd(P, P')` is constant.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// `sum c_i num^i den^(d-i)`: the value `den^d * P(num/den)`, exactly.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner in num with den powers accumulated from the top.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let d = self.degree().unwrap_or(0) as u32;
        let v = self.eval_homogeneous(x.numer(), x.denom());
        BigRational::new(v, num_traits::pow(x.denom().clone(), d as usize))
    }

    /// `sum c_i (p x + q)^i (r x + s)^(d - i)` with `d = deg self`.
    pub fn homogeneous_substitute(
        &self,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
        d: usize,
    ) -> IntPolynomial {
        let top = IntPolynomial::new(vec![q.clone(), p.clone()]);
        let bottom = IntPolynomial::new(vec![s.clone(), r.clone()]);
        let mut tops = vec![IntPolynomial::one()];
        let mut bottoms = vec![IntPolynomial::one()];
        for _ in 0..d {
            tops.push(tops.last().unwrap() * &top);
            bottoms.push(bottoms.last().unwrap() * &bottom);
        }
        let mut acc = IntPolynomial::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = (&tops[i] * &bottoms[d - i]).scale(c);
            acc = &acc + &term;
        }
        acc
    }

    pub fn bit_length_max(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl RatPolynomial {
    pub fn from_int(p: &IntPolynomial) -> Self {
        p.to_rational()
    }

    /// Division with remainder over Q.
    pub fn div_rem(&self, d: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if da < dd {
            return (Self::zero(), self.clone());
        }
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); da - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = &top / &lc;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &RatPolynomial) -> RatPolynomial {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> RatPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The integer polynomial with the same coefficients, if integral.
    pub fn to_integral(&self) -> Option<IntPolynomial> {
        if !self.is_integral() {
            return None;
        }
        Some(self.map(|c| c.to_integer()))
    }

    /// Clears denominators: returns `(P, c)` with `self = c * P`, `P` primitive in Z[x]
    /// with positive leading coefficient.
    pub fn to_primitive_int(&self) -> (IntPolynomial, BigRational) {
        if self.is_zero() {
            return (IntPolynomial::zero(), BigRational::zero());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled: IntPolynomial = self.map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
        let prim = scaled.primitive();
        let factor = BigRational::new(scaled.leading(), lcm) / BigRational::from_integer(prim.leading());
        (prim, factor)
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPolynomial {
        let mut acc = RatPolynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = RatPolynomial::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi - xj;
                let factor = RatPolynomial::new(vec![-xj / &denom, BigRational::one() / denom]);
                basis = &basis * &factor;
            }
            acc = &acc + &basis;
        }
        acc
    }
}

/// Sylvester resultant of two polynomials over Q.
///
/// For monic `a` this equals the product of `b` over the roots of `a`.
pub fn resultant(a: &RatPolynomial, b: &RatPolynomial) -> BigRational {
    let (Some(_), Some(_)) = (a.degree(), b.degree()) else {
        return BigRational::zero();
    };
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = BigRational::one();
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return acc * num_traits::pow(b.leading(), m);
        }
        let r = a.rem(&b);
        let Some(k) = r.degree() else {
            return BigRational::zero();
        };
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.leading(), m - k);
        a = b;
        b = r;
    }
}

pub fn resultant_int(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    resultant(&a.to_rational(), &b.to_rational()).to_integer()
}

/// `(-1)^(d(d-1)/2) Res(P, P') / lc(P)`.
pub fn discriminant(p: &RatPolynomial) -> BigRational {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return BigRational::zero();
    }
    let r = resultant(p, &p.derivative()) / p.leading();
    if (d * (d - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// A polynomial in `x` whose coefficients are affine in a parameter `Y`:
/// `constant(x) + Y * linear(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineFamily<T: Coefficient> {
    pub constant: Poly<T>,
    pub linear: Poly<T>,
}

impl<T: Coefficient> AffineFamily<T> {
    pub fn new(constant: Poly<T>, linear: Poly<T>) -> Self {
        AffineFamily { constant, linear }
    }

    pub fn at(&self, y: &T) -> Poly<T> {
        &self.constant + &self.linear.scale(y)
    }

    pub fn scale(&self, c: &T) -> Self {
        AffineFamily::new(self.constant.scale(c), self.linear.scale(c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.constant.degree().max(self.linear.degree())
    }

    /// Coefficient of `x^i` as the pair `(constant part, Y part)`.
    pub fn coeff(&self, i: usize) -> (T, T) {
        (self.constant.coeff(i), self.linear.coeff(i))
    }
}

impl AffineFamily<BigInt> {
    pub fn to_rational(&self) -> AffineFamily<BigRational> {
        AffineFamily::new(self.constant.to_rational(), self.linear.to_rational())
    }
}

/// Evaluates a function of the family parameter at `bound + 1` sample points and
/// interpolates: when the function is known to be a polynomial of degree at most
/// `bound` in `Y`, agreement at the samples proves a polynomial identity.
pub fn interpolate_in_parameter(
    bound: usize,
    f: impl Fn(&BigRational) -> BigRational,
) -> RatPolynomial {
    let pts: Vec<_> = (0..=bound)
        .map(|k| {
            let y = BigRational::from_integer(BigInt::from(k as i64 * 7 - 3));
            let v = f(&y);
            (y, v)
        })
        .collect();
    RatPolynomial::interpolate(&pts)
}

/// Discriminant of `family(Y)` as a polynomial in `Y`.
///
/// The discriminant is homogeneous of degree `2d - 2` in the coefficients, each
/// affine in `Y`, so `2d - 1` samples determine it.
pub fn family_discriminant(family: &AffineFamily<BigRational>) -> RatPolynomial {
    let d = family.degree().unwrap_or(0);
    let bound = (2 * d).saturating_sub(2);
    interpolate_in_parameter(bound, |y| discriminant(&family.at(y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(ip(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = ip(&[-1, 1]);
        let b = ip(&[1, 1]);
        assert_eq!(&a * &b, ip(&[-1, 0, 1]));
        assert_eq!(&a + &b, ip(&[0, 2]));
        assert_eq!(a.pow(3), ip(&[-1, 3, -3, 1]));
        assert_eq!(ip(&[5, 3, 1]).derivative(), ip(&[3, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(ip(&[1, 8401, 1]).to_string(), "x^2 + 8401*x + 1");
        assert_eq!(ip(&[-1, 0, -2]).to_string(), "-2*x^2 - 1");
        assert_eq!(ip(&[]).to_string(), "0");
    }

    #[test]
    fn content_and_primitive() {
        let p = ip(&[4, -2, -6]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive(), ip(&[-2, 1, 3]));
    }

    #[test]
    fn gcd_in_z() {
        // (x-1)(x+2) and (x-1)(2x+3)
        let a = &ip(&[-1, 1]) * &ip(&[2, 1]);
        let b = &ip(&[-1, 1]) * &ip(&[3, 2]);
        assert_eq!(a.gcd(&b), ip(&[-1, 1]));
        assert!(ip(&[1, 0, 1]).gcd(&ip(&[1, 1])).is_constant());
        assert!(!(&a * &ip(&[-1, 1])).is_squarefree());
        assert!(a.is_squarefree());
    }

    #[test]
    fn exact_division() {
        let a = &ip(&[-2, 1]) * &ip(&[-1, 2]);
        assert_eq!(a.div_exact(&ip(&[-1, 2])), Some(ip(&[-2, 1])));
        assert_eq!(a.div_exact(&ip(&[1, 1])), None);
    }

    #[test]
    fn pseudo_remainder_matches_rational_remainder() {
        let a = ip(&[3, -1, 4, 1, 5]);
        let d = ip(&[2, 0, 3]);
        let prem = a.pseudo_rem(&d).to_rational();
        let rem = a.to_rational().rem(&d.to_rational());
        // lc(d)^(4-2+1) = 27
        assert_eq!(prem, rem.scale(&q(27, 1)));
    }

    #[test]
    fn resultant_of_linear_is_evaluation() {
        // monic P, Res(P, x - c) = prod (x_k - c) = (-1)^d P(c)
        let p = ip(&[1, 8401, 1]).to_rational();
        let r = resultant(&p, &RatPolynomial::linear(q(1, 1), q(2, 1)));
        assert_eq!(r, q(16807, 1));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&ip(&[1, 0, 1]).to_rational()), q(-4, 1));
        assert_eq!(
            discriminant(&ip(&[1, 8401, 1]).to_rational()),
            q(70576797, 1)
        );
        // cubic x^3 - x: disc = 4
        assert_eq!(discriminant(&ip(&[0, -1, 0, 1]).to_rational()), q(4, 1));
        assert_eq!(discriminant(&ip(&[1, 2, 1]).to_rational()), q(0, 1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = RatPolynomial::new(vec![q(1, 2), q(-3, 1), q(0, 1), q(2, 5)]);
        let pts: Vec<_> = (0..4)
            .map(|k| {
                let x = q(k, 1);
                (x.clone(), p.eval(&x))
            })
            .collect();
        assert_eq!(RatPolynomial::interpolate(&pts), p);
    }

    #[test]
    fn homogeneous_evaluation() {
        let p = ip(&[1, 8401, 1]);
        assert_eq!(p.eval_homogeneous(&BigInt::from(2), &BigInt::from(1)), BigInt::from(16807));
        assert_eq!(p.eval_rational(&q(1, 2)), q(1 + 8401 * 2 + 4, 4));
    }

    #[test]
    fn to_primitive_int_roundtrip() {
        let p = RatPolynomial::new(vec![q(1, 2), q(-3, 4)]);
        let (ip_, c) = p.to_primitive_int();
        assert_eq!(ip_.to_rational().scale(&c), p);
        assert!(ip_.leading().is_positive());
    }
}
