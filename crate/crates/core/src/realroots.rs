//! Real-root counting with Sturm sequences, signatures and the Dirichlet rank
//! bound.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::RootError;
use crate::poly::{IntPolynomial, RatPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub r1: usize,
    pub r2: usize,
}

impl Signature {
    pub fn degree(&self) -> usize {
        self.r1 + 2 * self.r2
    }

    pub fn unit_rank(&self) -> usize {
        (self.r1 + self.r2).saturating_sub(1)
    }

    pub fn is_totally_real(&self) -> bool {
        self.r2 == 0
    }

    pub fn is_totally_imaginary(&self) -> bool {
        self.r1 == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r1, self.r2)
    }
}

/// A point of the extended real line with rational finite part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Self {
        Bound::Finite(BigRational::from_integer(v.into()))
    }
}

/// Sturm sequence of a squarefree polynomial using primitive pseudo-remainders.
///
/// Each term is a positive multiple of the true negated remainder, so sign
/// variations are unchanged.
pub fn sturm_sequence(p: &IntPolynomial) -> Result<Vec<IntPolynomial>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(RootError::NotSquarefree);
    }
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_constant() {
            break;
        }
        // prem(a, b) = lc(b)^(da - db + 1) rem(a, b)
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        let lc_sign_negative = b.leading().is_negative() && (da - db + 1) % 2 == 1;
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let r = r.div_scalar_exact(&c).expect("content divides");
        // -rem has the sign of -prem when lc(b)^k > 0, of +prem otherwise.
        seq.push(if lc_sign_negative { r } else { -r });
    }
    Ok(seq)
}

fn sign_at(p: &IntPolynomial, at: &Bound) -> i32 {
    let s = match at {
        Bound::PosInf => p.leading().signum(),
        Bound::NegInf => {
            let l = p.leading().signum();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -l
            } else {
                l
            }
        }
        // den > 0, so den^d P(num/den) has the sign of P.
        Bound::Finite(q) => p.eval_homogeneous(q.numer(), q.denom()).signum(),
    };
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(seq: &[IntPolynomial], at: &Bound) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, lo: &Bound, hi: &Bound) -> Result<usize, RootError> {
    let seq = sturm_sequence(p)?;
    if p.is_constant() {
        return Ok(0);
    }
    let vl = variations(&seq, lo);
    let vh = variations(&seq, hi);
    Ok(vl.saturating_sub(vh))
}

pub fn real_root_count(p: &IntPolynomial) -> Result<usize, RootError> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

pub fn signature_of(p: &IntPolynomial) -> Result<Signature, RootError> {
    let d = p.degree().ok_or(RootError::ZeroPolynomial)?;
    let r1 = real_root_count(p)?;
    Ok(Signature { r1, r2: (d - r1) / 2 })
}

/// Signature of a polynomial with Galois splitting field: `r1` is `0` or the degree.
pub fn galois_signature(p: &IntPolynomial) -> Result<Signature, RootError> {
    let s = signature_of(p)?;
    let d = s.degree();
    if s.r1 != 0 && s.r1 != d {
        return Err(RootError::GaloisDichotomy { r1: s.r1, degree: d });
    }
    Ok(s)
}

/// `(-1)^{d(d-1)/2} Res(P, P') / lc(P)`.
pub fn discriminant(p: &IntPolynomial) -> BigRational {
    crate::poly::discriminant(&p.to_rational())
}

pub fn discriminant_rational(p: &RatPolynomial) -> BigRational {
    crate::poly::discriminant(p)
}

/// Bit length of `|disc P|`.
pub fn discriminant_bits(p: &IntPolynomial) -> u64 {
    let d = discriminant(p);
    if d.is_zero() {
        return 0;
    }
    let v: BigInt = d.numer().abs() / d.denom();
    if v.is_zero() {
        0
    } else {
        v.bits()
    }
}

/// `s - (r1 + r2 - 1)`, floored at zero.
pub fn rank_bound(s: usize, sig: Signature) -> usize {
    s.saturating_sub(sig.unit_rank())
}
