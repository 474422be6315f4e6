//! Distances and geodesics in the Farey graph of a torus.
//!
//! Vertices are slopes; `s` and `t` are adjacent iff their intersection
//! number is 1. The exact distance is computed by moving `s` to ∞ with an
//! element of SL₂(Z) (an isometry of the graph) and descending the
//! Stern–Brocot tree toward the image of `t`.
//!
//! The descent uses the fact that every Farey edge separates the graph: for
//! a non-integral `r` with Stern–Brocot parents `x` and `y`, every path from
//! ∞ to `r` passes through `x` or `y`, so `d(∞, r) = 1 + min(d(∞, x), d(∞, y))`.
//! Along a run of mediants `m + j·f` with one parent `f` fixed this
//! recursion has the closed form `min(d(f) + 1, d(m) + j)`, so a whole
//! continued-fraction block is processed in one step.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope_algebra::{intersection_number, Slope, UnimodularZ};

/// A path in the Farey graph; consecutive vertices are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FareyPath {
    vertices: Vec<Slope>,
}

impl FareyPath {
    /// Validates adjacency and the absence of repeated vertices.
    pub fn new(vertices: Vec<Slope>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("a path has at least one vertex".into()));
        }
        for w in vertices.windows(2) {
            if !is_edge(&w[0], &w[1]) {
                return Err(Error::InvalidInput(format!("{} and {} are not adjacent", w[0], w[1])));
            }
        }
        let mut seen = std::collections::HashSet::new();
        if !vertices.iter().all(|v| seen.insert(v)) {
            return Err(Error::InvalidInput("path repeats a vertex".into()));
        }
        Ok(FareyPath { vertices })
    }

    pub fn vertices(&self) -> &[Slope] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn is_edge(s: &Slope, t: &Slope) -> bool {
    intersection_number(s, t).is_one()
}

pub fn distance(s: &Slope, t: &Slope) -> u64 {
    if s == t {
        return 0;
    }
    let to_inf = UnimodularZ::sending_to_infinity(s);
    distance_from_infinity(&to_inf.lft_apply(t))
}

/// `d(∞, r)`.
pub fn distance_from_infinity(r: &Slope) -> u64 {
    if r.is_infinity() {
        return 0;
    }
    if r.is_integer() {
        return 1;
    }
    let target = (r.p().clone(), r.q().clone());
    let floor = r.p().div_floor(r.q());
    // (vector, distance from ∞); denominators stay positive throughout
    let mut moving = ((floor.clone(), BigInt::one()), 1u64);
    let mut fixed = ((floor + 1u32, BigInt::one()), 1u64);
    loop {
        // mediants moving + j·fixed walk from `moving` toward `fixed`
        let gap_moving = cross(&moving.0, &target).abs();
        let gap_fixed = cross(&fixed.0, &target).abs();
        let (steps, rem) = gap_moving.div_rem(&gap_fixed);
        let hit = rem.is_zero();
        let j = if hit { steps } else { steps + 1u32 };
        let j_u = j.to_u64().expect("continued fraction block fits in u64");
        let at = |k: u64| (fixed.1 + 1).min(moving.1 + k);
        if hit {
            return at(j_u);
        }
        let before = if j_u > 1 { at(j_u - 1) } else { moving.1 };
        let jm1 = &j - 1u32;
        let near = (
            (&moving.0 .0 + &jm1 * &fixed.0 .0, &moving.0 .1 + &jm1 * &fixed.0 .1),
            before,
        );
        let past = (
            (&moving.0 .0 + &j * &fixed.0 .0, &moving.0 .1 + &j * &fixed.0 .1),
            at(j_u),
        );
        // the target now lies strictly between `near` and `past`
        fixed = near;
        moving = past;
    }
}

fn cross(u: &(BigInt, BigInt), v: &(BigInt, BigInt)) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// The lexicographically least geodesic from `s` to `t`, with slopes
/// compared by value and ∞ largest.
pub fn geodesic(s: &Slope, t: &Slope) -> FareyPath {
    let mut remaining = distance(s, t);
    let mut vertices = vec![s.clone()];
    let mut current = s.clone();
    while remaining > 1 {
        // only the two integers around the image of t can start a geodesic
        let to_inf = UnimodularZ::sending_to_infinity(&current);
        let back = to_inf.invert();
        let image = to_inf.lft_apply(t);
        let floor = image.p().div_floor(image.q());
        let next = [floor.clone(), floor + 1u32]
            .into_iter()
            .map(|n| back.lft_apply(&Slope::integer(n)))
            .filter(|c| distance(c, t) == remaining - 1)
            .min()
            .expect("a Farey neighbour on a geodesic exists");
        vertices.push(next.clone());
        current = next;
        remaining -= 1;
    }
    if remaining == 1 {
        vertices.push(t.clone());
    }
    FareyPath { vertices }
}

/// Neighbours of `s` whose coordinates are bounded by `bound` in absolute value.
///
/// With `p·v − q·u = 1`, the neighbours of `p/q` are exactly the slopes of
/// `(u + k·p, v + k·q)` for `k ∈ Z`.
pub fn bounded_neighbors(s: &Slope, bound: &BigInt) -> Vec<Slope> {
    let (p, q) = s.vector();
    let (u, v) = {
        let e = crate::slope_algebra::basis_completion(s);
        let [_, u, _, v] = e.entries();
        (u.clone(), v.clone())
    };
    let range_for = |base: &BigInt, step: &BigInt| -> Option<(BigInt, BigInt)> {
        // k with |base + k·step| ≤ bound
        if step.is_zero() {
            return (base.abs() <= *bound).then(|| (BigInt::from(i64::MIN), BigInt::from(i64::MAX)));
        }
        let lo_num = -bound - base;
        let hi_num = bound - base;
        let (lo, hi) = if step.is_positive() {
            (lo_num.div_ceil(step), hi_num.div_floor(step))
        } else {
            (hi_num.div_ceil(step), lo_num.div_floor(step))
        };
        Some((lo, hi))
    };
    let (Some((lo1, hi1)), Some((lo2, hi2))) = (range_for(&u, &p), range_for(&v, &q)) else {
        return Vec::new();
    };
    let lo = lo1.max(lo2);
    let hi = hi1.min(hi2);
    let mut out = Vec::new();
    let mut k = lo;
    while k <= hi {
        out.push(Slope::new(&u + &k * &p, &v + &k * &q).expect("neighbour is nonzero"));
        k += 1u32;
    }
    out
}

/// Breadth-first distance inside the subgraph on slopes with `|p|, |q| ≤ bound`.
///
/// Independent of [`distance`]; an upper bound on the true distance that is
/// exact whenever some geodesic stays inside the box.
pub fn bfs_distance_oracle(s: &Slope, t: &Slope, bound: u64) -> Result<u64> {
    bfs_distances_from(s, bound)?
        .get(t)
        .copied()
        .ok_or(Error::NoPathWithinBound { bound })
}

/// All subgraph distances from `s` within the box `|p|, |q| ≤ bound`.
pub fn bfs_distances_from(s: &Slope, bound: u64) -> Result<HashMap<Slope, u64>> {
    let b = BigInt::from(bound);
    if s.height() > b {
        return Err(Error::InvalidInput(format!("{s} lies outside the bound {bound}")));
    }
    let mut dist = HashMap::from([(s.clone(), 0u64)]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        for w in bounded_neighbors(&v, &b) {
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), dv + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Every canonical slope with `|p|, |q| ≤ bound`, ordered by height, then by value.
pub fn slopes_up_to_height(bound: u64) -> Vec<Slope> {
    let b = bound as i64;
    let mut out = Vec::new();
    for h in 1..=b {
        let mut level = Vec::new();
        for q in 0..=h {
            for p in -h..=h {
                if p.abs().max(q) != h || num_integer::gcd(p, q) != 1 || (q == 0 && p != 1) {
                    continue;
                }
                level.push(Slope::from_i64(p, q));
            }
        }
        level.sort();
        out.extend(level);
    }
    out
}
