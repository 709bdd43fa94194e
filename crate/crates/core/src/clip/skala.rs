//! Skala's clipper in homogeneous coordinates.
//!
//! The supporting line is `p = (x1, y1, 1) x (x2, y2, 1)`. Each window corner
//! is classified against it, the 4-bit mask picks the two window edges the
//! infinite line crosses, and the line is intersected with those edges (again
//! a cross product). The resulting chord is finally cut to the segment's own
//! extent.
//!
//! The clipper forms these products in a frame centred on the first endpoint.
//! There `r1 = (0, 0, 1)`, so `c` vanishes instead of being the difference of
//! two large products, which matters for short steep segments near an edge.

use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

/// Coefficients of `a*x + b*y + c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousLine {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HomogeneousLine {
    #[inline]
    pub fn eval(&self, p: Point2) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }
}

/// `(x1, y1, 1) x (x2, y2, 1)`.
#[inline]
pub fn line_coefficients(seg: Segment) -> HomogeneousLine {
    let (x1, y1, x2, y2) = (seg.p1.x, seg.p1.y, seg.p2.x, seg.p2.y);
    HomogeneousLine { a: y1 - y2, b: x2 - x1, c: x1 * y2 - x2 * y1 }
}

/// Window edges, indexed so that edge `i` joins corners `i` and `i + 1`
/// (corners counter-clockwise from bottom-left).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowEdge {
    Bottom,
    Right,
    Top,
    Left,
}

/// Edge pair crossed by a line, or `None` when the line misses the window.
pub type SkalaEdges = Option<(WindowEdge, WindowEdge)>;

use WindowEdge::{Bottom, Left, Right, Top};

/// Indexed by [`corner_mask`]: bit 0 bottom-left, bit 1 bottom-right, bit 2
/// top-right, bit 3 top-left, set when the corner is on the non-negative side.
/// An edge is crossed iff its two corners carry different bits. Masks 0101
/// and 1010 cannot come from a line (the corner values satisfy
/// `f(BL) + f(TR) == f(BR) + f(TL)`).
pub const EDGE_TABLE: [SkalaEdges; 16] = [
    None,                  // 0000
    Some((Bottom, Left)),  // 0001
    Some((Bottom, Right)), // 0010
    Some((Right, Left)),   // 0011
    Some((Right, Top)),    // 0100
    None,                  // 0101 unrealizable
    Some((Bottom, Top)),   // 0110
    Some((Top, Left)),     // 0111
    Some((Top, Left)),     // 1000
    Some((Bottom, Top)),   // 1001
    None,                  // 1010 unrealizable
    Some((Right, Top)),    // 1011
    Some((Right, Left)),   // 1100
    Some((Bottom, Right)), // 1101
    Some((Bottom, Left)),  // 1110
    None,                  // 1111
];

#[inline]
pub fn corner_mask(line: &HomogeneousLine, w: &ClipWindow) -> usize {
    mask_about(line, w, Point2::new(0.0, 0.0))
}

/// Corner mask for a line expressed in a frame with origin `o`.
#[inline]
fn mask_about(line: &HomogeneousLine, w: &ClipWindow, o: Point2) -> usize {
    w.corners()
        .iter()
        .enumerate()
        .fold(0, |mask, (i, &c)| mask | (usize::from(line.eval(Point2::new(c.x - o.x, c.y - o.y)) >= 0.0) << i))
}

/// Intersection of the line (in the frame with origin `o`) with the edge's
/// supporting line, `p x e`, with the edge coordinate written back exactly.
#[inline]
fn meet(line: &HomogeneousLine, edge: WindowEdge, w: &ClipWindow, o: Point2) -> Point2 {
    let HomogeneousLine { a, b, c } = *line;
    match edge {
        // x = X is (1, 0, -X); p x (1, 0, -X) = (-bX, c + aX, -b)
        Left | Right => {
            let x = if edge == Left { w.xmin() } else { w.xmax() };
            Point2::new(x, o.y - (c + a * (x - o.x)) / b)
        }
        // y = Y is (0, 1, -Y); p x (0, 1, -Y) = (-(c + bY), aY, a)
        Bottom | Top => {
            let y = if edge == Bottom { w.ymin() } else { w.ymax() };
            Point2::new(o.x - (c + b * (y - o.y)) / a, y)
        }
    }
}

pub fn clip_skala(seg: Segment, w: &ClipWindow) -> ClipResult {
    if seg.is_degenerate() {
        return if w.contains(seg.p1) { ClipResult::Accepted(seg) } else { ClipResult::Rejected };
    }

    let o = seg.p1;
    let (dx, dy) = (seg.p2.x - o.x, seg.p2.y - o.y);
    let line = line_coefficients(Segment::from_coords(0.0, 0.0, dx, dy));
    let Some((e1, e2)) = EDGE_TABLE[mask_about(&line, w, o)] else {
        return ClipResult::Rejected;
    };
    let (mut qa, mut qb) = (meet(&line, e1, w, o), meet(&line, e2, w, o));

    // cut the chord to the segment, keeping the segment's direction
    let param = |q: Point2| {
        if dx.abs() >= dy.abs() {
            (q.x - seg.p1.x) / dx
        } else {
            (q.y - seg.p1.y) / dy
        }
    };
    let (mut ta, mut tb) = (param(qa), param(qb));
    if ta > tb {
        (qa, qb) = (qb, qa);
        (ta, tb) = (tb, ta);
    }
    if ta > 1.0 || tb < 0.0 {
        return ClipResult::Rejected;
    }
    let start = if ta <= 0.0 { seg.p1 } else { qa };
    let end = if tb >= 1.0 { seg.p2 } else { qb };
    ClipResult::Accepted(Segment::new(start, end))
}
