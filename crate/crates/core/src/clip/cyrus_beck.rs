use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

use super::liang_barsky::ParamInterval;

#[derive(Debug, Clone, Copy)]
struct Edge {
    anchor: Point2,
    inward: Point2,
}

#[inline]
fn dot(a: Point2, b: Point2) -> f64 {
    a.x * b.x + a.y * b.y
}

#[inline]
fn sub(a: Point2, b: Point2) -> Point2 {
    Point2::new(a.x - b.x, a.y - b.y)
}

/// Edges of a counter-clockwise convex polygon with unit inward normals.
#[inline]
fn edges<const N: usize>(vertices: [Point2; N]) -> [Edge; N] {
    std::array::from_fn(|i| {
        let a = vertices[i];
        let e = sub(vertices[(i + 1) % N], a);
        let len = e.x.hypot(e.y);
        // interior lies to the left of each CCW edge
        Edge { anchor: a, inward: Point2::new(-e.y / len, e.x / len) }
    })
}

/// Cyrus–Beck: the window is treated as a convex polygon and the segment's
/// parameter interval is cut by each edge's inward half-plane.
pub fn clip_cyrus_beck(seg: Segment, w: &ClipWindow) -> ClipResult {
    let d = sub(seg.p2, seg.p1);
    let mut range = ParamInterval::FULL;

    for edge in edges(w.corners()) {
        // inside iff n . (P(t) - anchor) >= 0, i.e. num + t*den >= 0
        let num = dot(edge.inward, sub(seg.p1, edge.anchor));
        let den = dot(edge.inward, d);
        if !range.restrict(-den, num) {
            return ClipResult::Rejected;
        }
    }
    ClipResult::Accepted(range.apply(&seg))
}
