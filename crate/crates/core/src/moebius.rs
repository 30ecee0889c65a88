//! Exact arithmetic on the projective line over Q and on PGL2(Q).
//!
//! Points are reduced fractions with `∞ = (1, 0)`; homographies are primitive
//! integer matrices whose first nonzero entry (row-major) is positive, which
//! makes the representative of each PGL2 class unique.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::MoebiusError;

/// A point of P^1(Q).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    num: BigInt,
    den: BigInt,
}

impl ProjPoint {
    /// The point `num/den`; `den = 0` gives ∞. Both zero is rejected.
    pub fn new(num: BigInt, den: BigInt) -> Option<Self> {
        if num.is_zero() && den.is_zero() {
            return None;
        }
        if den.is_zero() {
            return Some(Self::infinity());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Some(ProjPoint { num: n, den: d })
    }

    pub fn from_i64(num: i64, den: i64) -> Option<Self> {
        Self::new(num.into(), den.into())
    }

    pub fn integer(v: i64) -> Self {
        ProjPoint { num: v.into(), den: BigInt::one() }
    }

    pub fn infinity() -> Self {
        ProjPoint { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn from_rational(q: &BigRational) -> Self {
        ProjPoint { num: q.numer().clone(), den: q.denom().clone() }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (!self.is_infinity()).then(|| BigRational::new(self.num.clone(), self.den.clone()))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ProjPoint {
    type Err = MoebiusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if matches!(s, "inf" | "∞" | "infinity") {
            return Ok(Self::infinity());
        }
        let bad = || MoebiusError::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Self::new(n, d).ok_or_else(bad)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of PGL2(Q), acting by `z ↦ (p z + q) / (r z + s)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homography {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    s: BigInt,
}

/// Canonical representative of the PGL2 class of `(p, q; r, s)`.
pub fn normalize(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Result<Homography, MoebiusError> {
    if (&p * &s - &q * &r).is_zero() {
        return Err(MoebiusError::Singular);
    }
    let mut g = p.gcd(&q).gcd(&r).gcd(&s);
    let first = [&p, &q, &r, &s].into_iter().find(|e| !e.is_zero()).unwrap();
    if first.is_negative() {
        g = -g;
    }
    Ok(Homography { p: p / &g, q: q / &g, r: r / &g, s: s / &g })
}

impl Homography {
    pub fn from_i64(p: i64, q: i64, r: i64, s: i64) -> Result<Self, MoebiusError> {
        normalize(p.into(), q.into(), r.into(), s.into())
    }

    pub fn identity() -> Self {
        Homography {
            p: BigInt::one(),
            q: BigInt::zero(),
            r: BigInt::zero(),
            s: BigInt::one(),
        }
    }

    /// `z ↦ ((t + 1) z - 1) / (z + 1)`: order 3, 4, 6 for `t = -1, 0, 1`.
    pub fn rotation_with_trace(t: i64) -> Self {
        Self::from_i64(t + 1, -1, 1, 1).expect("determinant t + 2 is nonzero for |t| <= 1")
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.p, &self.q, &self.r, &self.s)
    }

    pub fn determinant(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, z: &ProjPoint) -> ProjPoint {
        let num = &self.p * &z.num + &self.q * &z.den;
        let den = &self.r * &z.num + &self.s * &z.den;
        ProjPoint::new(num, den).expect("nonsingular matrix maps a point to a point")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Homography) -> Homography {
        normalize(
            &self.p * &other.p + &self.q * &other.r,
            &self.p * &other.q + &self.q * &other.s,
            &self.r * &other.p + &self.s * &other.r,
            &self.r * &other.q + &self.s * &other.s,
        )
        .expect("product of invertible matrices is invertible")
    }

    pub fn inverse(&self) -> Homography {
        normalize(self.s.clone(), -self.q.clone(), -self.r.clone(), self.p.clone())
            .expect("adjugate of an invertible matrix is invertible")
    }

    /// `self^k`, negative `k` meaning powers of the inverse.
    pub fn power(&self, k: i64) -> Homography {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Homography::identity(), |acc, _| acc.compose(&base))
    }

    pub fn element_order(&self, cap: u32) -> Result<u32, MoebiusError> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.compose(self);
        }
        Err(MoebiusError::OrderExceedsCap { cap })
    }
}

impl fmt::Display for Homography {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.p, self.q, self.r, self.s)
    }
}

impl fmt::Debug for Homography {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Homography {
    type Err = MoebiusError;

    /// Parses `(p,q;r,s)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MoebiusError::Parse(s.to_string());
        let body = s.trim().strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let (top, bottom) = body.split_once(';').ok_or_else(bad)?;
        let mut vals = Vec::with_capacity(4);
        for part in top.split(',').chain(bottom.split(',')) {
            vals.push(part.trim().parse::<BigInt>().map_err(|_| bad())?);
        }
        let [p, q, r, s]: [BigInt; 4] = vals.try_into().map_err(|_| bad())?;
        normalize(p, q, r, s)
    }
}

impl Serialize for Homography {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Homography {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite subgroup of PGL2(Q), elements in canonical (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubgroup {
    elements: Vec<Homography>,
    generators: Vec<Homography>,
}

pub const DEFAULT_GROUP_CAP: usize = 24;

/// Closure of `gens` under composition.
pub fn generate_group(gens: &[Homography], cap: usize) -> Result<FiniteSubgroup, MoebiusError> {
    for g in gens {
        g.element_order(cap as u32)?;
    }
    let mut seen: BTreeSet<Homography> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Homography::identity());
    queue.push_back(Homography::identity());
    while let Some(h) = queue.pop_front() {
        for g in gens {
            let next = h.compose(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(MoebiusError::GroupExceedsCap { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(FiniteSubgroup {
        elements: seen.into_iter().collect(),
        generators: gens.to_vec(),
    })
}

impl FiniteSubgroup {
    pub fn elements(&self) -> &[Homography] {
        &self.elements
    }

    pub fn generators(&self) -> &[Homography] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements.iter().all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Largest element order.
    pub fn exponent_max(&self) -> u32 {
        self.elements
            .iter()
            .map(|h| h.element_order(self.order() as u32).expect("finite group"))
            .max()
            .unwrap_or(1)
    }

    pub fn contains(&self, h: &Homography) -> bool {
        self.elements.binary_search(h).is_ok()
    }

    pub fn is_closed(&self) -> bool {
        self.contains(&Homography::identity())
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }
}

/// Distinct images of `p`, sorted with ∞ last.
pub fn orbit(group: &FiniteSubgroup, p: &ProjPoint) -> Vec<ProjPoint> {
    let set: BTreeSet<ProjPoint> = group.elements().iter().map(|h| h.apply(p)).collect();
    set.into_iter().collect()
}

pub fn stabilizer_order(group: &FiniteSubgroup, p: &ProjPoint) -> usize {
    group.order() / orbit(group, p).len()
}
