//! Normal curves on the one-vertex triangulation of the torus.
//!
//! # Model
//!
//! The torus is the unit square with opposite sides identified. Its single
//! vertex is the corner; its three edges are
//!
//! | edge | name | points            | homology class |
//! |------|------|-------------------|----------------|
//! | 1    | `H`  | `(t, 0) ~ (t, 1)` | `(1, 0)`       |
//! | 2    | `V`  | `(0, t) ~ (1, t)` | `(0, 1)`       |
//! | 3    | `D`  | `(t, t)`          | `(1, 1)`       |
//!
//! The lower-right triangle `L = (0,0)(1,0)(1,1)` and the upper-left
//! triangle `U = (0,0)(1,1)(0,1)` carry the orientation of the square.
//! A normal arc of type `i` misses edge `i`, i.e. it cuts off the corner
//! opposite edge `i`. A normal curve is given by the arc counts
//! `(x1, x2, x3)` in `L`; the matching equations force the same counts in `U`.
//! The slope of a primitive class `(p, q)` is `p/q`.
//!
//! Edge weights are `w_H = x2 + x3`, `w_V = x1 + x3`, `w_D = x1 + x2`; an
//! essential curve of class `(p, q)` has weights `|q|`, `|p|`, `|p − q|`.
//!
//! The full table is [`CONVENTIONS`].

mod realize;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope_algebra::Slope;

pub use realize::{
    intersection_points, normal_sign_intersections, IntersectionPoint, Triangle, MAX_REALIZED_POINTS,
};

/// The labeling conventions of this module in a stable textual form. Results
/// that depend on arc labels, orientations or homology bases are only
/// comparable between builds that share this table.
pub const CONVENTIONS: &str = "\
torus: unit square, sides identified, vertex at the corner
edge 1 = H: (t,0)~(t,1), class (1,0)
edge 2 = V: (0,t)~(1,t), class (0,1)
edge 3 = D: (t,t), class (1,1)
triangle L: (0,0)(1,0)(1,1), ccw sides H+, V+, D-
triangle U: (0,0)(1,1)(0,1), ccw sides D+, H-, V-
arc type i: misses edge i (cuts off the corner opposite edge i)
L corners: type 1 = V@1,D@1; type 2 = H@0,D@0; type 3 = H@1,V@0
U corners: type 1 = D@0,V@0; type 2 = D@1,H@1; type 3 = H@0,V@1
slope of primitive class (p,q) = p/q
oriented class, e = x - min(x): type 1 (e3, e2+e3); type 2 (e1+e3, e3); type 3 (-e1, e2)
normal sign: + iff the clockwise boundary of the triangle runs from the second arc to the first
";

/// Arc counts `(x1, x2, x3)` of a normal curve in one triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalCoordinates(pub [u64; 3]);

impl NormalCoordinates {
    pub fn new(x1: u64, x2: u64, x3: u64) -> Self {
        NormalCoordinates([x1, x2, x3])
    }

    pub fn get(&self, arc_type: usize) -> u64 {
        self.0[arc_type - 1]
    }

    /// Weights on the edges `H`, `V`, `D`.
    pub fn edge_weights(&self) -> [u64; 3] {
        let [x1, x2, x3] = self.0;
        [x2 + x3, x1 + x3, x1 + x2]
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let [a, b, c] = self.0;
        let [d, e, f] = other.0;
        Some(NormalCoordinates([a.checked_add(d)?, b.checked_add(e)?, c.checked_add(f)?]))
    }

    pub fn curve_types(&self) -> BTreeSet<u8> {
        curve_types(self)
    }

    pub fn decompose(&self) -> CurveDecomposition {
        decompose(self)
    }
}

impl fmt::Display for NormalCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a},{b},{c}")
    }
}

impl FromStr for NormalCoordinates {
    type Err = Error;

    /// Parses `"x1,x2,x3"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed coordinates {s:?}, expected \"x1,x2,x3\""));
        let parts: Vec<u64> = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [a, b, c] = parts[..] else { return Err(bad()) };
        Ok(NormalCoordinates([a, b, c]))
    }
}

/// Components of a normal multicurve: vertex links plus parallel copies of
/// at most one essential slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDecomposition {
    pub essential_slope: Option<Slope>,
    pub essential_multiplicity: u64,
    pub trivial_count: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedIntersections {
    pub positives: u64,
    pub negatives: u64,
}

impl SignedIntersections {
    pub fn algebraic(&self) -> i64 {
        self.positives as i64 - self.negatives as i64
    }

    pub fn total(&self) -> u64 {
        self.positives + self.negatives
    }

    /// All recorded signs agree (vacuously true without intersections).
    pub fn same_sign(&self) -> bool {
        self.positives == 0 || self.negatives == 0
    }
}

/// Types `i` with `x_i ≤ x_j` for all `j`.
pub fn curve_types(x: &NormalCoordinates) -> BTreeSet<u8> {
    let min = *x.0.iter().min().expect("three coordinates");
    (1u8..=3).filter(|&i| x.0[usize::from(i) - 1] == min).collect()
}

/// Homology class of the essential part of `x` (vertex links removed),
/// oriented coherently with the arcs of a curve of type `arc_type`.
///
/// Returns `None` unless `arc_type` is one of the types of `x`. The zero
/// class means `x` consists of vertex links only. The curve `(k, 0, 0)` has
/// types 2 and 3, which orient it oppositely.
pub fn oriented_class(x: &NormalCoordinates, arc_type: u8) -> Option<(i128, i128)> {
    if !curve_types(x).contains(&arc_type) {
        return None;
    }
    let m = *x.0.iter().min().expect("three coordinates");
    let [e1, e2, e3] = x.0.map(|v| i128::from(v - m));
    Some(match arc_type {
        1 => (e3, e2 + e3),
        2 => (e1 + e3, e3),
        _ => (-e1, e2),
    })
}

/// Essential class of `x` up to sign.
pub(crate) fn essential_class(x: &NormalCoordinates) -> (i128, i128) {
    let t = *curve_types(x).first().expect("some type is minimal");
    oriented_class(x, t).expect("least type is a type")
}

pub fn decompose(x: &NormalCoordinates) -> CurveDecomposition {
    let trivial_count = *x.0.iter().min().expect("three coordinates");
    let (p, q) = essential_class(x);
    if p == 0 && q == 0 {
        return CurveDecomposition { essential_slope: None, essential_multiplicity: 0, trivial_count };
    }
    let g = num_integer::gcd(p, q);
    let slope = Slope::new(BigInt::from(p / g), BigInt::from(q / g)).expect("nonzero class");
    CurveDecomposition {
        essential_slope: Some(slope),
        essential_multiplicity: u64::try_from(g).expect("multiplicity is bounded by a coordinate"),
        trivial_count,
    }
}

pub fn slope_of(x: &NormalCoordinates) -> Result<Slope> {
    decompose(x).essential_slope.ok_or(Error::NoEssentialComponent)
}

/// Minimal coordinates of `mult` parallel copies of `s` plus `trivial` vertex links.
pub fn from_slope(s: &Slope, mult: u64, trivial: u64) -> Result<NormalCoordinates> {
    if mult == 0 {
        return Err(Error::InvalidInput("multiplicity must be at least 1".into()));
    }
    let overflow = || Error::InvalidInput(format!("coordinates of {s} exceed 64 bits"));
    let (p, q) = s.vector();
    let w_h = q.abs();
    let w_v = p.abs();
    let w_d = (&p - &q).abs();
    let half = |v: BigInt| -> Result<u64> { (v / 2u32).to_u64().ok_or_else(overflow) };
    let base = [
        half(&w_v + &w_d - &w_h)?,
        half(&w_h + &w_d - &w_v)?,
        half(&w_h + &w_v - &w_d)?,
    ];
    let mut out = [0u64; 3];
    for (o, b) in out.iter_mut().zip(base) {
        *o = b
            .checked_mul(mult)
            .and_then(|v| v.checked_add(trivial))
            .ok_or_else(overflow)?;
    }
    Ok(NormalCoordinates(out))
}
