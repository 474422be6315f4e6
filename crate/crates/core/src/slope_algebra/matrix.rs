use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::slope::Slope;
use crate::error::{Error, Result};
use crate::json::{format_rational, RationalText};

/// A 2×2 matrix over Q with determinant exactly 1, acting on slopes by
/// `p/q ↦ (a·p + b·q)/(c·p + d·q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularQ {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

impl UnimodularQ {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular { det: format_rational(&det) });
        }
        Ok(UnimodularQ { a, b, c, d })
    }

    /// Builds from `(numerator, denominator)` pairs in row-major order.
    pub fn from_fractions(entries: [(i64, i64); 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(|(n, m)| {
            if m == 0 {
                Err(Error::InvalidInput("zero denominator".into()))
            } else {
                Ok(BigRational::new(n.into(), m.into()))
            }
        });
        Self::new(a?, b?, c?, d?)
    }

    pub fn from_integers(entries: [i64; 4]) -> Result<Self> {
        Self::from_fractions(entries.map(|n| (n, 1)))
    }

    pub fn identity() -> Self {
        UnimodularQ {
            a: BigRational::one(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::one(),
        }
    }

    /// Entries `[a, b, c, d]` in row-major order.
    pub fn entries(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn compose(&self, other: &UnimodularQ) -> UnimodularQ {
        // det(AB) = det(A)det(B) = 1
        UnimodularQ {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.d
    }

    pub fn invert(&self) -> UnimodularQ {
        UnimodularQ {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Least `d ≥ 1` with `d·M` integral.
    pub fn denominator(&self) -> BigUint {
        self.entries()
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
            .magnitude()
            .clone()
    }

    pub fn is_integral(&self) -> bool {
        self.entries().iter().all(|e| e.is_integer())
    }

    pub fn is_plus_minus_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn apply_vector(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn lft_apply(&self, s: &Slope) -> Slope {
        let (p, q) = s.vector();
        let (x, y) = self.apply_vector(&BigRational::from_integer(p), &BigRational::from_integer(q));
        let l = x.denom().lcm(y.denom());
        let x = x.numer() * (&l / x.denom());
        let y = y.numer() * (&l / y.denom());
        Slope::new(x, y).expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// The integer matrix, if every entry is an integer.
    pub fn to_integral(&self) -> Option<UnimodularZ> {
        if !self.is_integral() {
            return None;
        }
        let [a, b, c, d] = self.entries().map(|e| e.to_integer());
        Some(UnimodularZ { a, b, c, d })
    }
}

pub fn compose(a: &UnimodularQ, b: &UnimodularQ) -> UnimodularQ {
    a.compose(b)
}

pub fn trace(m: &UnimodularQ) -> BigRational {
    m.trace()
}

pub fn invert(m: &UnimodularQ) -> UnimodularQ {
    m.invert()
}

pub fn denominator(m: &UnimodularQ) -> BigUint {
    m.denominator()
}

/// Linear-fractional action of `m` on a slope, computed on the column vector
/// so that ∞ needs no special case.
pub fn lft_apply(m: &UnimodularQ, s: &Slope) -> Slope {
    m.lft_apply(s)
}

impl Mul for &UnimodularQ {
    type Output = UnimodularQ;

    fn mul(self, rhs: &UnimodularQ) -> UnimodularQ {
        self.compose(rhs)
    }
}

impl fmt::Display for UnimodularQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries().map(format_rational);
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl FromStr for UnimodularQ {
    type Err = Error;

    /// Parses the JSON matrix format `[["a","b"],["c","d"]]`.
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("malformed matrix {s:?}: {e}")))
    }
}

impl Serialize for UnimodularQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.entries().map(format_rational);
        [[a, b], [c, d]].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnimodularQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, d]] = <[[RationalText; 2]; 2]>::deserialize(deserializer)?;
        UnimodularQ::new(a.0, b.0, c.0, d.0).map_err(serde::de::Error::custom)
    }
}

/// An element of SL₂(Z): a gluing map or torus homeomorphism in fixed bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularZ {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularZ {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        Ok(UnimodularZ { a, b, c, d })
    }

    pub fn from_i64(entries: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(BigInt::from);
        Self::new(a, b, c, d)
    }

    pub fn identity() -> Self {
        UnimodularZ {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn compose(&self, other: &UnimodularZ) -> UnimodularZ {
        UnimodularZ {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn invert(&self) -> UnimodularZ {
        UnimodularZ {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn pow(&self, mut n: u64) -> UnimodularZ {
        let mut base = self.clone();
        let mut acc = UnimodularZ::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    pub fn to_q(&self) -> UnimodularQ {
        let [a, b, c, d] = self.entries().map(|e| BigRational::from_integer(e.clone()));
        UnimodularQ { a, b, c, d }
    }

    pub fn lft_apply(&self, s: &Slope) -> Slope {
        let (p, q) = s.vector();
        let x = &self.a * &p + &self.b * &q;
        let y = &self.c * &p + &self.d * &q;
        Slope::new(x, y).expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// An element of SL₂(Z) carrying `s` to ∞ = 1/0.
    pub fn sending_to_infinity(s: &Slope) -> UnimodularZ {
        basis_completion(s).invert()
    }
}

/// The canonical unimodular basis `[[p, u], [q, v]]` whose first column is
/// the canonical vector of `s`: `p·v − q·u = 1` with `0 ≤ u < |p|`, or, when
/// `p = 0`, `u = −1` and `v = 0`.
pub fn basis_completion(s: &Slope) -> UnimodularZ {
    let (p, q) = s.vector();
    if p.is_zero() {
        // s = 0/1
        return UnimodularZ {
            a: BigInt::zero(),
            b: -BigInt::one(),
            c: BigInt::one(),
            d: BigInt::zero(),
        };
    }
    // p·v − q·u = 1  ⇔  u ≡ −q⁻¹ (mod p)
    let ext = q.extended_gcd(&p);
    // ext.x·q + ext.y·p = gcd = ±1
    let sign = ext.gcd.signum();
    let q_inv = ext.x * &sign;
    let modulus = p.abs();
    let u = (-q_inv).mod_floor(&modulus);
    let v = (BigInt::one() + &q * &u) / &p;
    debug_assert_eq!(&p * &v - &q * &u, BigInt::one());
    UnimodularZ { a: p, b: u, c: q, d: v }
}

impl Mul for &UnimodularZ {
    type Output = UnimodularZ;

    fn mul(self, rhs: &UnimodularZ) -> UnimodularZ {
        self.compose(rhs)
    }
}

impl From<&UnimodularZ> for UnimodularQ {
    fn from(m: &UnimodularZ) -> Self {
        m.to_q()
    }
}

impl fmt::Display for UnimodularZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for UnimodularZ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: UnimodularQ = s.parse()?;
        q.to_integral()
            .ok_or_else(|| Error::InvalidInput(format!("matrix {s} must have integer entries")))
    }
}

impl Serialize for UnimodularZ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.entries().map(ToString::to_string);
        [[a, b], [c, d]].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnimodularZ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let q = UnimodularQ::deserialize(deserializer)?;
        q.to_integral()
            .ok_or_else(|| serde::de::Error::custom("matrix must have integer entries"))
    }
}
