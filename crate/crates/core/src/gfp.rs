//! Dense polynomials over a prime field F_p, constant term first, with `p < 2^32`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::poly::IntPolynomial;

pub type FpPoly = Vec<u64>;

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

pub fn reduce(f: &IntPolynomial, p: u64) -> FpPoly {
    let bp = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| c.mod_floor(&bp).to_u64().expect("residue fits"))
            .collect(),
    )
}

pub fn lift(a: &[u64]) -> IntPolynomial {
    IntPolynomial::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub fn monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| mulmod(c, li, p)).collect()
        }
    }
}

/// Quotient and remainder; `b` nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let db = deg(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = mulmod(r[dr], li, p);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(c, bc, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    divrem(a, b, p).1
}

/// Monic gcd.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(a: &[u64], p: u64) -> FpPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    deg(&gcd(a, &derivative(a, p), p)) == Some(0)
}

/// `base^e mod m`.
pub fn powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
    let mut result = vec![1u64];
    let mut b = rem(base, m, p);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = rem(&mul(&result, &b, p), m, p);
        }
        if i + 1 < bits {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    rem(&result, m, p)
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(d, g_d)` where `g_d` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(usize, FpPoly)> {
    let mut out = Vec::new();
    let mut f = monic(f, p);
    let x = vec![0, 1];
    let mut h = x.clone();
    let bp = BigUint::from(p);
    let mut d = 0;
    while deg(&f).is_some_and(|n| n >= 2 * (d + 1)) {
        d += 1;
        h = powmod(&h, &bp, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if deg(&g).is_some_and(|n| n > 0) {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((d, g));
        }
    }
    if let Some(n) = deg(&f) {
        if n > 0 {
            out.push((n, f));
        }
    }
    out
}

/// Degrees of the irreducible factors, ascending with multiplicity.
pub fn factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f, p) {
        let k = deg(&g).unwrap_or(0) / d;
        out.extend(std::iter::repeat_n(d, k));
    }
    out
}

/// Deterministic sequence of splitting candidates of degree below `n`.
fn candidate(k: u64, n: usize, p: u64) -> FpPoly {
    let mut v = Vec::with_capacity(n);
    let mut x = k + p;
    while x > 0 && v.len() < n {
        v.push(x % p);
        x /= p;
    }
    trim(v)
}

/// Splits a product of distinct monic irreducibles of degree `e` (odd `p`).
pub fn equal_degree(g: &[u64], e: usize, p: u64) -> Vec<FpPoly> {
    let n = deg(g).unwrap_or(0);
    if n <= e {
        return vec![monic(g, p)];
    }
    let exp = (num_traits::pow(BigUint::from(p), e) - BigUint::from(1u32)) / BigUint::from(2u32);
    for k in 1.. {
        let a = candidate(k, n, p);
        if deg(&a).is_none_or(|d| d == 0) {
            continue;
        }
        let b = sub(&powmod(&a, &exp, g, p), &[1], p);
        let h = gcd(&b, g, p);
        let dh = deg(&h).unwrap_or(0);
        if dh > 0 && dh < n {
            let other = divrem(g, &h, p).0;
            let mut out = equal_degree(&h, e, p);
            out.extend(equal_degree(&other, e, p));
            return out;
        }
    }
    unreachable!("the candidate sequence is unbounded")
}

/// Complete factorization of a monic squarefree polynomial into monic irreducibles.
pub fn factor(f: &[u64], p: u64) -> Vec<FpPoly> {
    assert!(p % 2 == 1, "equal-degree splitting needs an odd prime");
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p));
    }
    out.sort_by_key(|g| g.len());
    out
}

pub fn is_zero(a: &[u64]) -> bool {
    a.iter().all(Zero::is_zero)
}
