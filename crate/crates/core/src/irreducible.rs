//! Irreducibility certificates over Q.
//!
//! Factor-degree patterns modulo small primes rule out most splittings. When
//! they do not (every Frobenius of a regular dihedral extension has order at
//! most half the degree), one prime's factorization is lifted p-adically and
//! every admissible recombination is tried as a divisor over Z.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::gfp;
use crate::poly::IntPolynomial;

/// Primes used for degree patterns.
pub const PATTERN_PRIMES: usize = 25;
/// Recombination is skipped above this many modular factors.
pub const MAX_LIFTED_FACTORS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Degree1,
    /// Quadratic with non-square discriminant.
    Discriminant,
    /// No proper factor degree is compatible with all these primes.
    DegreePatterns { primes: Vec<u64> },
    /// No recombination of the lifted factors mod `prime` divides over Z.
    Recombination { prime: u64, factor_degrees: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(Certificate),
    Reducible { factor: IntPolynomial },
    Inconclusive { possible_degrees: Vec<usize> },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, Irreducibility::Reducible { .. })
    }
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducibility::Irreducible(_) => f.write_str("yes"),
            Irreducibility::Reducible { factor } => write!(f, "no (factor {factor})"),
            Irreducibility::Inconclusive { .. } => f.write_str("inconclusive"),
        }
    }
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Bitmask of subset sums of `degrees`, bit `k` set when some subset sums to `k`.
fn subset_sums(degrees: &[usize], total: usize) -> Vec<bool> {
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &d in degrees {
        for k in (d..=total).rev() {
            if reach[k - d] {
                reach[k] = true;
            }
        }
    }
    reach
}

/// `lc^{d-1} f(x / lc)`, monic with the same splitting behaviour.
fn monic_transform(f: &IntPolynomial) -> IntPolynomial {
    let d = f.degree().unwrap_or(0);
    let lc = f.leading();
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i == d { BigInt::one() } else { c * Pow::pow(&lc, (d - 1 - i) as u32) })
            .collect(),
    )
}

/// Inverse of [`monic_transform`] on a factor: primitive part of `g(lc x)`.
fn untransform(g: &IntPolynomial, lc: &BigInt) -> IntPolynomial {
    IntPolynomial::new(
        g.coeffs().iter().enumerate().map(|(i, c)| c * Pow::pow(lc, i as u32)).collect(),
    )
    .primitive()
}

pub fn irreducible(f: &IntPolynomial) -> Irreducibility {
    let f = f.primitive();
    let Some(d) = f.degree() else {
        return Irreducibility::Inconclusive { possible_degrees: vec![] };
    };
    if d == 0 {
        return Irreducibility::Inconclusive { possible_degrees: vec![] };
    }
    if d == 1 {
        return Irreducibility::Irreducible(Certificate::Degree1);
    }
    if f.coeff(0).is_zero() {
        return Irreducibility::Reducible { factor: IntPolynomial::x() };
    }
    if d == 2 {
        return quadratic(&f);
    }
    // A repeated factor would leave every reduction non-squarefree.
    let common = f.gcd(&f.derivative());
    if !common.is_constant() {
        return Irreducibility::Reducible { factor: common.primitive() };
    }
    let lc = f.leading();
    let g = monic_transform(&f);

    let mut allowed = vec![true; d + 1];
    let mut used = Vec::new();
    let mut best: Option<(u64, usize)> = None;
    for p in small_primes() {
        if used.len() >= PATTERN_PRIMES {
            break;
        }
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = gfp::reduce(&g, p);
        if gp.len() != d + 1 || !gfp::is_squarefree(&gp, p) {
            continue;
        }
        let degrees = gfp::factor_degrees(&gp, p);
        let sums = subset_sums(&degrees, d);
        for k in 1..d {
            allowed[k] &= sums[k];
        }
        used.push(p);
        if best.is_none_or(|(_, r)| degrees.len() < r) {
            best = Some((p, degrees.len()));
        }
        if (1..d).all(|k| !allowed[k]) {
            return Irreducibility::Irreducible(Certificate::DegreePatterns { primes: used });
        }
    }
    let possible: Vec<usize> = (1..d).filter(|&k| allowed[k]).collect();
    let Some((p, r)) = best else {
        return Irreducibility::Inconclusive { possible_degrees: possible };
    };
    if r > MAX_LIFTED_FACTORS {
        return Irreducibility::Inconclusive { possible_degrees: possible };
    }
    match recombine(&g, p, &allowed) {
        Recombined::Factor(h) => Irreducibility::Reducible { factor: untransform(&h, &lc) },
        Recombined::None(factor_degrees) => {
            Irreducibility::Irreducible(Certificate::Recombination { prime: p, factor_degrees })
        }
    }
}

fn quadratic(f: &IntPolynomial) -> Irreducibility {
    let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
    let disc: BigInt = &b * &b - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return Irreducibility::Irreducible(Certificate::Discriminant);
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return Irreducibility::Irreducible(Certificate::Discriminant);
    }
    // Root (-b + s) / 2a gives the factor 2a x + b - s.
    let factor = IntPolynomial::new(vec![&b - &s, BigInt::from(2) * &a]).primitive();
    Irreducibility::Reducible { factor }
}

enum Recombined {
    Factor(IntPolynomial),
    None(Vec<usize>),
}

fn mod_poly(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half: BigInt = m / 2;
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial over Z.
fn divrem_monic(a: &IntPolynomial, b: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let db = b.degree().expect("nonzero divisor");
    debug_assert!(b.leading().is_one());
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    if r.len() <= db {
        return (IntPolynomial::zero(), a.clone());
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i].clone();
        if c.is_zero() {
            continue;
        }
        let shift = i - db;
        for (j, bc) in b.coeffs().iter().enumerate() {
            r[shift + j] -= &c * bc;
        }
        q[shift] = c;
    }
    r.truncate(db);
    (IntPolynomial::new(q), IntPolynomial::new(r))
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` to the same
/// relations modulo `m^2`. `g` and `h` monic.
fn hensel_step(
    f: &IntPolynomial,
    g: &IntPolynomial,
    h: &IntPolynomial,
    s: &IntPolynomial,
    t: &IntPolynomial,
    m: &BigInt,
) -> (IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial) {
    let m2 = m * m;
    let e = mod_poly(&(f - &(g * h)), &m2);
    let (q, r) = divrem_monic(&mod_poly(&(s * &e), &m2), h);
    let g1 = mod_poly(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h1 = mod_poly(&(h + &r), &m2);
    let b = mod_poly(&(&(&(s * &g1) + &(t * &h1)) - &IntPolynomial::one()), &m2);
    let (c, dd) = divrem_monic(&mod_poly(&(s * &b), &m2), &h1);
    let s1 = mod_poly(&(s - &dd), &m2);
    let t1 = mod_poly(&(&(t - &(t * &b)) - &(&c * &g1)), &m2);
    (g1, h1, s1, t1)
}

/// `s, t` with `s a + t b = 1` over F_p for coprime monic `a, b`.
fn bezout(a: &[u64], b: &[u64], p: u64) -> (gfp::FpPoly, gfp::FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !gfp::is_zero(&r1) {
        let (q, r) = gfp::divrem(&r0, &r1, p);
        let s2 = gfp::sub(&s0, &gfp::mul(&q, &s1, p), p);
        let t2 = gfp::sub(&t0, &gfp::mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is a nonzero constant.
    let c = gfp::inv(r0[0], p);
    let scale = |v: &[u64]| -> gfp::FpPoly { v.iter().map(|&x| (x as u128 * c as u128 % p as u128) as u64).collect() };
    (scale(&s0), scale(&t0))
}

/// Lifts `f ≡ g h (mod p)` to modulus at least `bound`; returns the lifted
/// monic `(g, h)` and the modulus.
fn lift_pair(
    f: &IntPolynomial,
    g: &[u64],
    h: &[u64],
    p: u64,
    bound: &BigInt,
) -> (IntPolynomial, IntPolynomial, BigInt) {
    let (s, t) = bezout(g, h, p);
    let (mut g, mut h) = (gfp::lift(g), gfp::lift(h));
    let (mut s, mut t) = (gfp::lift(&s), gfp::lift(&t));
    let mut m = BigInt::from(p);
    while &m < bound {
        let next = hensel_step(f, &g, &h, &s, &t, &m);
        (g, h, s, t) = next;
        m = &m * &m;
    }
    (g, h, m)
}

/// `2^d ||f||_1`, bounding every coefficient of any monic factor of `f`.
fn factor_coefficient_bound(f: &IntPolynomial) -> BigInt {
    let d = f.degree().unwrap_or(0);
    let l1: BigInt = f.coeffs().iter().map(|c| c.abs()).sum();
    l1 << d
}

fn recombine(f: &IntPolynomial, p: u64, allowed: &[bool]) -> Recombined {
    let d = f.degree().unwrap_or(0);
    let fp = gfp::reduce(f, p);
    let factors = gfp::factor(&fp, p);
    let degrees: Vec<usize> = factors.iter().map(|g| g.len() - 1).collect();
    let bound = factor_coefficient_bound(f) * 2 + 1;

    // Lift sequentially: f = g_1 * rest_1, rest_1 = g_2 * rest_2, ...
    let mut lifted = Vec::with_capacity(factors.len());
    let mut rest_int = f.clone();
    let mut modulus = BigInt::one();
    let mut rest_fp = fp.clone();
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            lifted.push(mod_poly(&rest_int, &modulus));
            break;
        }
        let (h_fp, _) = gfp::divrem(&rest_fp, g, p);
        let (gl, hl, m) = lift_pair(&rest_int, g, &h_fp, p, &bound);
        lifted.push(gl);
        rest_int = hl;
        modulus = m;
        rest_fp = h_fp;
    }
    if factors.len() == 1 {
        return Recombined::None(degrees);
    }

    let r = lifted.len();
    for mask in 1u64..(1u64 << r) - 1 {
        let deg_sum: usize = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i]).sum();
        if deg_sum > d / 2 || !allowed[deg_sum] {
            continue;
        }
        let prod = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .fold(IntPolynomial::one(), |acc, i| mod_poly(&(&acc * &lifted[i]), &modulus));
        let cand = symmetric(&prod, &modulus);
        if f.div_exact(&cand).is_some() {
            return Recombined::Factor(cand);
        }
    }
    Recombined::None(degrees)
}

/// Rational roots `p/q` of a primitive polynomial, by the rational root theorem;
/// `None` when the end coefficients are too large to factor by trial division.
pub fn rational_roots(f: &IntPolynomial) -> Option<Vec<num_rational::BigRational>> {
    let f = f.primitive();
    let d = f.degree()?;
    if d == 0 {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    let mut g = f.clone();
    if g.coeff(0).is_zero() {
        roots.push(num_rational::BigRational::zero());
        while g.coeff(0).is_zero() {
            g = IntPolynomial::new(g.coeffs()[1..].to_vec());
        }
    }
    let limit = BigInt::from(10u64.pow(12));
    let a0 = g.coeff(0).abs();
    let an = g.leading().abs();
    if a0 > limit || an > limit {
        return None;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= *n {
            if (n % &k).is_zero() {
                out.push(k.clone());
                let other = n / &k;
                if other != k {
                    out.push(other);
                }
            }
            k += 1;
        }
        out
    };
    for p in divisors(&a0) {
        for q in divisors(&an) {
            if p.gcd(&q) != BigInt::one() {
                continue;
            }
            for sp in [p.clone(), -p.clone()] {
                if g.eval_homogeneous(&sp, &q).is_zero() {
                    roots.push(num_rational::BigRational::new(sp, q.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}
