use std::ops::{BitAnd, BitOr};

use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

/// Region code of a point relative to the window.
///
/// ```text
///  1001 | 1000 | 1010
/// ------+------+------ ymax
///  0001 | 0000 | 0010
/// ------+------+------ ymin
///  0101 | 0100 | 0110
///     xmin   xmax
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Outcode(u8);

impl Outcode {
    pub const INSIDE: Outcode = Outcode(0);
    pub const LEFT: Outcode = Outcode(1);
    pub const RIGHT: Outcode = Outcode(2);
    pub const BOTTOM: Outcode = Outcode(4);
    pub const TOP: Outcode = Outcode(8);

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_inside(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, other: Outcode) -> bool {
        self.0 & other.0 == other.0 && other.0 != 0
    }

    #[inline]
    fn without(self, other: Outcode) -> Outcode {
        Outcode(self.0 & !other.0)
    }
}

impl BitOr for Outcode {
    type Output = Outcode;
    fn bitor(self, rhs: Outcode) -> Outcode {
        Outcode(self.0 | rhs.0)
    }
}

impl BitAnd for Outcode {
    type Output = Outcode;
    fn bitand(self, rhs: Outcode) -> Outcode {
        Outcode(self.0 & rhs.0)
    }
}

#[inline]
pub fn compute_outcode(p: Point2, w: &ClipWindow) -> Outcode {
    let mut code = 0;
    if p.x < w.xmin() {
        code |= Outcode::LEFT.0;
    } else if p.x > w.xmax() {
        code |= Outcode::RIGHT.0;
    }
    if p.y < w.ymin() {
        code |= Outcode::BOTTOM.0;
    } else if p.y > w.ymax() {
        code |= Outcode::TOP.0;
    }
    Outcode(code)
}

/// Iterative outcode clipping: trivial accept, trivial reject, otherwise
/// move one outside endpoint onto one violated boundary and retry.
pub fn clip_cohen_sutherland(seg: Segment, w: &ClipWindow) -> ClipResult {
    let mut p = [seg.p1, seg.p2];
    let mut code = [compute_outcode(p[0], w), compute_outcode(p[1], w)];
    // Boundaries an endpoint has already been moved onto. A later move can
    // land an ulp beyond one of them; those bits are masked so rounding can't
    // make the loop revisit a boundary.
    let mut settled = [Outcode::INSIDE; 2];

    loop {
        if (code[0] | code[1]).is_inside() {
            return ClipResult::Accepted(Segment::new(p[0], p[1]));
        }
        if !(code[0] & code[1]).is_inside() {
            return ClipResult::Rejected;
        }

        let i = if code[0].is_inside() { 1 } else { 0 };
        let out = code[i];
        // Recompute from the current endpoints, as the classic formulation does.
        let (a, b) = (p[0], p[1]);
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        // Only reachable when a masked bit hid a shared outside region: both
        // endpoints are beyond the same boundary.
        let crosses_y = out.contains(Outcode::TOP) || out.contains(Outcode::BOTTOM);
        if (crosses_y && dy == 0.0) || (!crosses_y && dx == 0.0) {
            return ClipResult::Rejected;
        }
        let (boundary, moved) = if out.contains(Outcode::TOP) {
            (Outcode::TOP, Point2::new(a.x + dx * (w.ymax() - a.y) / dy, w.ymax()))
        } else if out.contains(Outcode::BOTTOM) {
            (Outcode::BOTTOM, Point2::new(a.x + dx * (w.ymin() - a.y) / dy, w.ymin()))
        } else if out.contains(Outcode::RIGHT) {
            (Outcode::RIGHT, Point2::new(w.xmax(), a.y + dy * (w.xmax() - a.x) / dx))
        } else {
            (Outcode::LEFT, Point2::new(w.xmin(), a.y + dy * (w.xmin() - a.x) / dx))
        };

        settled[i] = settled[i] | boundary;
        p[i] = moved;
        code[i] = compute_outcode(moved, w).without(settled[i]);
    }
}
