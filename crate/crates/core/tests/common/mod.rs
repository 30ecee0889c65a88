//! Independent oracles: dense linear algebra and brute-force group closure,
//! sharing no code with the library beyond its plain data types.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use pgl2_core::poly::{IntPolynomial, RatPolynomial};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ip(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    acc
}

/// Resultant as the determinant of the Sylvester matrix; coefficients ascending.
pub fn sylvester(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    if size == 0 {
        return BigRational::one();
    }
    let mut rows = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    det(rows)
}

fn poly_mod(a: &[BigRational], p: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let d = p.len() - 1;
    let lead = p[d].clone();
    while r.len() > d {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let f = top / &lead;
        let shift = r.len() - d;
        for i in 0..d {
            let v = &f * &p[i];
            r[shift + i] -= v;
        }
    }
    r.resize(d, BigRational::zero());
    r
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Matrix of multiplication by `g(θ)` on the basis `1, θ, …, θ^{d-1}` of `Q[x]/(P)`.
pub fn mult_matrix(p: &[BigRational], g: &[BigRational]) -> Vec<Vec<BigRational>> {
    let d = p.len() - 1;
    let mut m = vec![vec![BigRational::zero(); d]; d];
    for j in 0..d {
        let mut basis = vec![BigRational::zero(); j + 1];
        basis[j] = BigRational::one();
        let col = poly_mod(&poly_mul(g, &basis), p);
        for i in 0..d {
            m[i][j] = col[i].clone();
        }
    }
    m
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

fn mat_inv(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let p = a[col][col].clone();
        for c in 0..2 * n {
            a[col][c] = &a[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Characteristic polynomial (ascending, monic) by Faddeev–LeVerrier.
pub fn faddeev_leverrier(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = mat_mul(a, &mk);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -tr / q(k as i64);
    }
    c
}

/// Characteristic polynomial of `num(θ)/den(θ)` through the regular representation.
pub fn charpoly_by_matrix(p: &IntPolynomial, num: &IntPolynomial, den: &IntPolynomial) -> Option<RatPolynomial> {
    let to = |f: &IntPolynomial| f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect::<Vec<_>>();
    let pp = to(p);
    let mn = mult_matrix(&pp, &to(num));
    let md = mult_matrix(&pp, &to(den));
    let m = mat_mul(&mn, &mat_inv(&md)?);
    Some(RatPolynomial::new(faddeev_leverrier(&m)))
}

/// A homography as a normalized integer matrix `[p, q, r, s]`.
pub type Mat = [i64; 4];

pub fn normalize(m: [i64; 4]) -> Mat {
    let g = m.iter().fold(0i64, |g, &v| g.gcd(&v));
    let mut out = m.map(|v| v / g);
    if out.iter().find(|v| **v != 0).is_some_and(|v| *v < 0) {
        out = out.map(|v| -v);
    }
    out
}

pub fn compose(a: &Mat, b: &Mat) -> Mat {
    normalize([
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ])
}

/// Closure under composition by repeated multiplication until nothing new appears.
pub fn closure(gens: &[Mat], cap: usize) -> Option<BTreeSet<Mat>> {
    let mut set: BTreeSet<Mat> = gens.iter().map(|g| normalize(*g)).collect();
    set.insert([1, 0, 0, 1]);
    loop {
        let items: Vec<Mat> = set.iter().copied().collect();
        let mut grew = false;
        for a in &items {
            for b in &items {
                if set.insert(compose(a, b)) {
                    grew = true;
                }
            }
        }
        if set.len() > cap {
            return None;
        }
        if !grew {
            return Some(set);
        }
    }
}

/// Image of `num/den` (with `den = 0` for ∞) as a reduced pair.
pub fn apply(m: &Mat, num: i64, den: i64) -> (i64, i64) {
    let a = m[0] * num + m[1] * den;
    let b = m[2] * num + m[3] * den;
    let g = a.gcd(&b);
    let (a, b) = (a / g, b / g);
    if b < 0 || (b == 0 && a < 0) {
        (-a, -b)
    } else {
        (a, b)
    }
}

/// `|v|` is `±k^n` for some integer `k`, by floating estimate and exact check.
pub fn is_signed_power(v: &BigInt, n: u32) -> bool {
    let a = v.abs();
    if a.is_zero() || a.is_one() {
        return true;
    }
    let est = (a.to_string().parse::<f64>().unwrap_or(f64::MAX)).powf(1.0 / n as f64).round() as i64;
    (est.saturating_sub(2).max(0)..=est + 2).any(|k| BigInt::from(k).pow(n) == a)
}
