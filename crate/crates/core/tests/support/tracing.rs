//! Combinatorial tracing of a normal curve on the square torus.
//!
//! Corners of each triangle are located from vertex coordinates, arcs are
//! glued across edges point by point, and each component's homology class is
//! the signed count of its crossings of the vertical and horizontal sides.

#![allow(dead_code)]

use std::collections::BTreeMap;

type Pt = (i32, i32);

/// Edge segments as they appear in one triangle: (start, end), parameter
/// increasing from start to end. Order is H, V, D.
struct Tri {
    segments: [(Pt, Pt); 3],
}

const LOWER: Tri = Tri { segments: [((0, 0), (1, 0)), ((1, 0), (1, 1)), ((0, 0), (1, 1))] };
const UPPER: Tri = Tri { segments: [((0, 1), (1, 1)), ((0, 0), (0, 1)), ((0, 0), (1, 1))] };

/// (edge, at_start) pairs of the two ends of arcs of `arc_type` (1-based).
fn corner_ends(tri: &Tri, arc_type: usize) -> [(usize, bool); 2] {
    let missed = arc_type - 1;
    let others: Vec<usize> = (0..3).filter(|&e| e != missed).collect();
    let (a, b) = (tri.segments[others[0]], tri.segments[others[1]]);
    let corner = [a.0, a.1].into_iter().find(|p| *p == b.0 || *p == b.1).expect("edges meet");
    [(others[0], a.0 == corner), (others[1], b.0 == corner)]
}

/// For each edge point, the edge point it is joined to inside `tri`.
fn arcs(tri: &Tri, x: [u64; 3]) -> BTreeMap<(usize, u64), (usize, u64)> {
    let w = [x[1] + x[2], x[0] + x[2], x[0] + x[1]];
    let mut out = BTreeMap::new();
    for t in 1..=3 {
        let ends = corner_ends(tri, t);
        for r in 0..x[t - 1] {
            let idx = |(e, at_start): (usize, bool)| (e, if at_start { r } else { w[e] - 1 - r });
            let (p, q) = (idx(ends[0]), idx(ends[1]));
            out.insert(p, q);
            out.insert(q, p);
        }
    }
    out
}

/// Homology classes of the components of the curve with coordinates `x`,
/// each up to sign; `(0, 0)` marks a vertex link.
pub fn trace_components(x: [u64; 3]) -> Vec<(i64, i64)> {
    let lower = arcs(&LOWER, x);
    let upper = arcs(&UPPER, x);
    let mut unvisited: std::collections::BTreeSet<(usize, u64)> = lower.keys().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        let (mut p, mut q) = (0i64, 0i64);
        let mut at = start;
        loop {
            unvisited.remove(&at);
            // leave through the lower triangle, enter the upper one at `next`
            let next = lower[&at];
            unvisited.remove(&next);
            match next.0 {
                0 => q -= 1,
                1 => p += 1,
                _ => {}
            }
            let back = upper[&next];
            match back.0 {
                0 => q += 1,
                1 => p -= 1,
                _ => {}
            }
            at = back;
            if at == start {
                break;
            }
        }
        out.push((p, q));
    }
    out
}

/// (essential slope as canonical (p, q), multiplicity, trivial count).
pub fn trace_decompose(x: [u64; 3]) -> (Option<(i64, i64)>, u64, u64) {
    let mut slope = None;
    let mut mult = 0;
    let mut trivial = 0;
    for (p, q) in trace_components(x) {
        if (p, q) == (0, 0) {
            trivial += 1;
            continue;
        }
        let canonical = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
        if let Some(s) = slope {
            assert_eq!(s, canonical, "two essential slopes in {x:?}");
        }
        slope = Some(canonical);
        mult += 1;
    }
    (slope, mult, trivial)
}
