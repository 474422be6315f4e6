//! Realization of two normal multicurves in minimal position.
//!
//! The essential part of each curve is drawn as straight lines of constant
//! `p·y − q·x (mod 1)`; parallel copies and curves of equal slope are then
//! disjoint, and distinct slopes meet the minimal number of times. Vertex
//! links are pushed toward the vertex, the first curve's outermost, so they
//! meet nothing. Arcs inside each triangle are recovered combinatorially from
//! the order of points along the edges.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{essential_class, NormalCoordinates, SignedIntersections};
use crate::error::{Error, Result};

/// Realizations with more edge points than this are refused.
pub const MAX_REALIZED_POINTS: u64 = 1 << 22;

type Q = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Triangle {
    Lower,
    Upper,
}

/// One transverse intersection between an arc of the first curve and an arc
/// of the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionPoint {
    pub triangle: Triangle,
    pub first_arc_type: u8,
    pub second_arc_type: u8,
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Edge {
    H,
    V,
    D,
}

impl Edge {
    const ALL: [Edge; 3] = [Edge::H, Edge::V, Edge::D];

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    Start,
    End,
}

/// Arc type and the two edge ends it joins.
type Corner = (u8, (Edge, End), (Edge, End));

struct Layout {
    triangle: Triangle,
    /// Sides in counterclockwise order; `true` when the edge runs with it.
    sides: [(Edge, bool); 3],
    corners: [Corner; 3],
}

const LOWER: Layout = Layout {
    triangle: Triangle::Lower,
    sides: [(Edge::H, true), (Edge::V, true), (Edge::D, false)],
    corners: [
        (1, (Edge::V, End::End), (Edge::D, End::End)),
        (2, (Edge::H, End::Start), (Edge::D, End::Start)),
        (3, (Edge::H, End::End), (Edge::V, End::Start)),
    ],
};

const UPPER: Layout = Layout {
    triangle: Triangle::Upper,
    sides: [(Edge::D, true), (Edge::H, false), (Edge::V, false)],
    corners: [
        (1, (Edge::D, End::Start), (Edge::V, End::Start)),
        (2, (Edge::D, End::End), (Edge::H, End::End)),
        (3, (Edge::H, End::Start), (Edge::V, End::End)),
    ],
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    NearStart(u64),
    Interior(Q),
    NearEnd(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Owner {
    First,
    Second,
}

struct Placement {
    /// Points on each edge in increasing parameter order.
    edges: [Vec<Owner>; 3],
    /// For each owner and edge, indices into `edges` of that owner's points.
    own: [[Vec<usize>; 3]; 2],
}

/// Parameters on `edge` where `p·y − q·x ≡ c (mod 1)`.
fn line_points(p: i128, q: i128, edge: Edge, c: Q, out: &mut Vec<Q>) {
    let lambda = match edge {
        Edge::H => -q,
        Edge::V => p,
        Edge::D => p - q,
    };
    if lambda == 0 {
        return;
    }
    let c = if lambda > 0 { c } else { Q::from_integer(1) - c };
    let n = lambda.abs();
    for k in 0..n {
        out.push((c + Q::from_integer(k)) / Q::from_integer(n));
    }
}

fn essential_points(x: &NormalCoordinates, theta: Q, edge: Edge) -> Vec<Q> {
    let (p, q) = essential_class(x);
    let mut out = Vec::new();
    if p == 0 && q == 0 {
        return out;
    }
    let k = num_integer::gcd(p, q);
    let (p, q) = (p / k, q / k);
    for j in 0..k {
        let c = (Q::from_integer(j) + theta) / Q::from_integer(k);
        line_points(p, q, edge, c, &mut out);
    }
    out
}

fn place(x: &NormalCoordinates, y: &NormalCoordinates, theta_y: Q) -> Option<Placement> {
    let mx = *x.0.iter().min().expect("three coordinates");
    let my = *y.0.iter().min().expect("three coordinates");
    let theta_x = Q::new(1, 2);
    let mut edges: [Vec<Owner>; 3] = Default::default();
    let mut own: [[Vec<usize>; 3]; 2] = Default::default();
    for edge in Edge::ALL {
        let mut keyed: Vec<(Key, Owner)> = Vec::new();
        keyed.extend((0..mx).map(|r| (Key::NearStart(r), Owner::First)));
        keyed.extend((0..my).map(|r| (Key::NearStart(mx + r), Owner::Second)));
        keyed.extend((0..my).map(|r| (Key::NearEnd(r), Owner::Second)));
        keyed.extend((0..mx).map(|r| (Key::NearEnd(my + r), Owner::First)));
        keyed.extend(essential_points(x, theta_x, edge).into_iter().map(|t| (Key::Interior(t), Owner::First)));
        keyed.extend(essential_points(y, theta_y, edge).into_iter().map(|t| (Key::Interior(t), Owner::Second)));
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        let i = edge.index();
        for (pos, (_, owner)) in keyed.iter().enumerate() {
            own[*owner as usize][i].push(pos);
        }
        edges[i] = keyed.into_iter().map(|(_, o)| o).collect();
    }
    Some(Placement { edges, own })
}

/// Counterclockwise position of a point on the boundary of a triangle.
type Position = (usize, usize);

struct Chord {
    arc_type: u8,
    ends: [Position; 2],
}

fn chords(layout: &Layout, placement: &Placement, owner: Owner, x: &NormalCoordinates) -> Vec<Chord> {
    let own = &placement.own[owner as usize];
    let position = |edge: Edge, index: usize| -> Position {
        let slot = layout.sides.iter().position(|s| s.0 == edge).expect("edge on triangle");
        let len = placement.edges[edge.index()].len();
        (slot, if layout.sides[slot].1 { index } else { len - 1 - index })
    };
    let nth = |edge: Edge, end: End, r: usize| -> usize {
        let v = &own[edge.index()];
        match end {
            End::Start => v[r],
            End::End => v[v.len() - 1 - r],
        }
    };
    let mut out = Vec::new();
    for &(arc_type, (e1, end1), (e2, end2)) in &layout.corners {
        for r in 0..x.get(usize::from(arc_type)) as usize {
            out.push(Chord {
                arc_type,
                ends: [position(e1, nth(e1, end1, r)), position(e2, nth(e2, end2, r))],
            });
        }
    }
    out
}

fn crosses(a: &Chord, b: &Chord) -> bool {
    let (lo, hi) = (a.ends[0].min(a.ends[1]), a.ends[0].max(a.ends[1]));
    let inside = |p: Position| lo < p && p < hi;
    inside(b.ends[0]) != inside(b.ends[1])
}

/// `+1` when the clockwise boundary runs from the second chord to the first.
fn sign(first: &Chord, second: &Chord) -> i8 {
    for pa in first.ends {
        for pb in second.ends {
            if pa.0 == pb.0 {
                return if pb.1 > pa.1 { 1 } else { -1 };
            }
        }
    }
    unreachable!("two chords of a triangle share a side")
}

/// Every intersection point of `x` and `y` in minimal position.
pub fn intersection_points(x: &NormalCoordinates, y: &NormalCoordinates) -> Result<Vec<IntersectionPoint>> {
    let total: u128 = x.edge_weights().iter().chain(y.edge_weights().iter()).map(|&w| u128::from(w)).sum();
    if total > u128::from(MAX_REALIZED_POINTS) {
        return Err(Error::InvalidInput(format!(
            "curves {x} and {y} have more than {MAX_REALIZED_POINTS} edge points"
        )));
    }
    let placement = (3i128..)
        .find_map(|d| place(x, y, Q::new(1, d)))
        .expect("finitely many offsets collide");
    let mut out = Vec::new();
    for layout in [&LOWER, &UPPER] {
        let first = chords(layout, &placement, Owner::First, x);
        let second = chords(layout, &placement, Owner::Second, y);
        for a in &first {
            for b in &second {
                if crosses(a, b) {
                    out.push(IntersectionPoint {
                        triangle: layout.triangle,
                        first_arc_type: a.arc_type,
                        second_arc_type: b.arc_type,
                        sign: sign(a, b),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Counts of positive and negative normal signs of `x ∩ y` in minimal position.
pub fn normal_sign_intersections(x: &NormalCoordinates, y: &NormalCoordinates) -> Result<SignedIntersections> {
    let mut out = SignedIntersections::default();
    for point in intersection_points(x, y)? {
        if point.sign > 0 {
            out.positives += 1;
        } else {
            out.negatives += 1;
        }
    }
    Ok(out)
}
