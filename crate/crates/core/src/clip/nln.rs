//! Nicholl–Lee–Nicholl clipping.
//!
//! The region of the first endpoint selects the case. Reflections about the
//! axes and the diagonal `x = y` map the nine regions onto three canonical
//! ones: inside, left edge strip and bottom-left corner. Within a case the
//! direction of the segment is compared against the rays from `p1` to the
//! window corners (cross products, i.e. division-free slope comparisons),
//! which selects the entry and exit edges before any intersection is
//! computed. Each intersection is computed at most once.

use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

#[derive(Debug, Clone, Copy)]
struct Rect {
    xmin: f64,
    ymin: f64,
    xmax: f64,
    ymax: f64,
}

/// A composition of reflections. All of them are exact in floating point.
#[derive(Debug, Clone, Copy, Default)]
struct Frame {
    swap: bool,
    flip_x: bool,
    flip_y: bool,
}

impl Frame {
    #[inline]
    fn forward(&self, p: Point2) -> Point2 {
        let (mut x, mut y) = if self.swap { (p.y, p.x) } else { (p.x, p.y) };
        if self.flip_x {
            x = -x;
        }
        if self.flip_y {
            y = -y;
        }
        Point2::new(x, y)
    }

    #[inline]
    fn back(&self, p: Point2) -> Point2 {
        let (mut x, mut y) = (p.x, p.y);
        if self.flip_x {
            x = -x;
        }
        if self.flip_y {
            y = -y;
        }
        if self.swap {
            Point2::new(y, x)
        } else {
            Point2::new(x, y)
        }
    }

    #[inline]
    fn rect(&self, w: &ClipWindow) -> Rect {
        let mut r = if self.swap {
            Rect { xmin: w.ymin(), ymin: w.xmin(), xmax: w.ymax(), ymax: w.xmax() }
        } else {
            Rect { xmin: w.xmin(), ymin: w.ymin(), xmax: w.xmax(), ymax: w.ymax() }
        };
        if self.flip_x {
            (r.xmin, r.xmax) = (-r.xmax, -r.xmin);
        }
        if self.flip_y {
            (r.ymin, r.ymax) = (-r.ymax, -r.ymin);
        }
        r
    }
}

/// Cross product of the ray `p -> corner` with direction `(dx, dy)`.
/// Positive when the direction turns counter-clockwise from the ray.
#[inline]
fn turn(p: Point2, corner_x: f64, corner_y: f64, dx: f64, dy: f64) -> f64 {
    (corner_x - p.x) * dy - (corner_y - p.y) * dx
}

#[inline]
fn region(v: f64, lo: f64, hi: f64) -> i8 {
    if v < lo {
        -1
    } else if v > hi {
        1
    } else {
        0
    }
}

/// Clips in the canonical frame, from a start point inside, left of, or
/// below-left of the rectangle.
type CaseFn = fn(Point2, Point2, &Rect) -> Option<(Point2, Point2)>;

pub fn clip_nicholl_lee_nicholl(seg: Segment, w: &ClipWindow) -> ClipResult {
    let cx = region(seg.p1.x, w.xmin(), w.xmax());
    let cy = region(seg.p1.y, w.ymin(), w.ymax());
    let (dx, dy) = (seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y);

    let (frame, case): (Frame, CaseFn) = match (cx, cy) {
        (0, 0) => (Frame { swap: false, flip_x: dx < 0.0, flip_y: dy < 0.0 }, from_inside),
        (_, 0) => (Frame { swap: false, flip_x: cx > 0, flip_y: dy < 0.0 }, from_left_edge),
        (0, _) => (Frame { swap: true, flip_x: cy > 0, flip_y: dx < 0.0 }, from_left_edge),
        _ => (Frame { swap: false, flip_x: cx > 0, flip_y: cy > 0 }, from_bottom_left),
    };

    let r = frame.rect(w);
    match case(frame.forward(seg.p1), frame.forward(seg.p2), &r) {
        Some((a, b)) => ClipResult::Accepted(Segment::new(frame.back(a), frame.back(b))),
        None => ClipResult::Rejected,
    }
}

/// Exit point of a segment leaving through the top or right edge, for a
/// direction with `dx >= 0`, `dy >= 0` and `p2` beyond the window.
#[inline]
fn exit_top_or_right(p1: Point2, dx: f64, dy: f64, r: &Rect) -> Point2 {
    let top = if dy == 0.0 {
        false
    } else if dx == 0.0 {
        true
    } else {
        turn(p1, r.xmax, r.ymax, dx, dy) > 0.0
    };
    if top {
        Point2::new(p1.x + dx * (r.ymax - p1.y) / dy, r.ymax)
    } else {
        Point2::new(r.xmax, p1.y + dy * (r.xmax - p1.x) / dx)
    }
}

/// `p1` inside, direction in the first quadrant.
fn from_inside(p1: Point2, p2: Point2, r: &Rect) -> Option<(Point2, Point2)> {
    if p2.x <= r.xmax && p2.y <= r.ymax {
        return Some((p1, p2));
    }
    let (dx, dy) = (p2.x - p1.x, p2.y - p1.y);
    Some((p1, exit_top_or_right(p1, dx, dy, r)))
}

/// `p1` left of the window within its vertical extent, `dy >= 0`.
fn from_left_edge(p1: Point2, p2: Point2, r: &Rect) -> Option<(Point2, Point2)> {
    if p2.x < r.xmin {
        return None;
    }
    let (dx, dy) = (p2.x - p1.x, p2.y - p1.y);
    // above the ray to the top-left corner: misses the window
    if turn(p1, r.xmin, r.ymax, dx, dy) > 0.0 {
        return None;
    }
    let entry = Point2::new(r.xmin, p1.y + dy * (r.xmin - p1.x) / dx);
    if p2.x <= r.xmax && p2.y <= r.ymax {
        return Some((entry, p2));
    }
    Some((entry, exit_top_or_right(p1, dx, dy, r)))
}

/// `p1` in the bottom-left corner region.
fn from_bottom_left(p1: Point2, p2: Point2, r: &Rect) -> Option<(Point2, Point2)> {
    if p2.x < r.xmin || p2.y < r.ymin {
        return None;
    }
    let (dx, dy) = (p2.x - p1.x, p2.y - p1.y);
    // outside the wedge spanned by the top-left and bottom-right corners
    if turn(p1, r.xmin, r.ymax, dx, dy) > 0.0 || turn(p1, r.xmax, r.ymin, dx, dy) < 0.0 {
        return None;
    }
    let entry = if turn(p1, r.xmin, r.ymin, dx, dy) >= 0.0 {
        Point2::new(r.xmin, p1.y + dy * (r.xmin - p1.x) / dx)
    } else {
        Point2::new(p1.x + dx * (r.ymin - p1.y) / dy, r.ymin)
    };
    if p2.x <= r.xmax && p2.y <= r.ymax {
        return Some((entry, p2));
    }
    Some((entry, exit_top_or_right(p1, dx, dy, r)))
}
