//! Exact reference clipper over arbitrary-precision rationals.
//!
//! Every finite `f64` is a dyadic rational, so inputs are lifted without
//! error. The clip itself is the parametric interval intersection
//! `[0, 1] ∩ {t : P(t) ∈ W}`, computed exactly; none of the production
//! clippers share this code path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoint {
    pub x: Rational,
    pub y: Rational,
}

impl ExactPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        ExactPoint { x, y }
    }

    pub fn from_f64(p: Point2) -> Self {
        ExactPoint { x: lift(p.x), y: lift(p.y) }
    }

    pub fn to_f64(&self) -> Point2 {
        Point2::new(to_nearest_f64(&self.x), to_nearest_f64(&self.y))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSegment {
    pub p1: ExactPoint,
    pub p2: ExactPoint,
}

impl ExactSegment {
    pub fn from_f64(seg: &Segment) -> Self {
        ExactSegment { p1: ExactPoint::from_f64(seg.p1), p2: ExactPoint::from_f64(seg.p2) }
    }
}

/// Closed rectangle with rational bounds; assumed `xmin < xmax`, `ymin < ymax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactWindow {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

impl ExactWindow {
    pub fn from_f64(w: &ClipWindow) -> Self {
        ExactWindow { xmin: lift(w.xmin()), ymin: lift(w.ymin()), xmax: lift(w.xmax()), ymax: lift(w.ymax()) }
    }

    fn contains(&self, p: &ExactPoint) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactClipOutcome {
    Accept { p1: ExactPoint, p2: ExactPoint, grazing: bool },
    Reject { grazing: bool },
}

impl ExactClipOutcome {
    pub fn grazing(&self) -> bool {
        match self {
            ExactClipOutcome::Accept { grazing, .. } | ExactClipOutcome::Reject { grazing } => *grazing,
        }
    }

    pub fn is_accept(&self) -> bool {
        matches!(self, ExactClipOutcome::Accept { .. })
    }
}

/// Exact value of a finite double.
pub fn lift(v: f64) -> Rational {
    Rational::from_float(v).expect("finite coordinate")
}

/// Nearest double to `r` (ties to even).
pub fn to_nearest_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational converts to f64")
}

/// Exact parametric clip with the grazing classification.
///
/// An input is grazing when its exact answer is measure-zero, so that
/// rounding can legitimately flip accept/reject:
/// * the clipped part is a single point, which covers
///   degenerate segments and segments that end exactly on the boundary;
/// * the supporting line meets the closed window in exactly one point, i.e.
///   it touches a corner without entering;
/// * the clipped part lies on a boundary edge.
///
/// A straight segment can only touch a convex window without properly
/// crossing it at a vertex or along an edge, so these three cases also cover
/// tangential contact.
pub fn clip_exact(seg: &ExactSegment, w: &ExactWindow) -> ExactClipOutcome {
    let (p1, p2) = (&seg.p1, &seg.p2);
    let dx = &p2.x - &p1.x;
    let dy = &p2.y - &p1.y;

    let line_touch = line_window_contact(p1, &dx, &dy, w);
    let line_single_point = matches!(line_touch, Contact::Point);

    let Some((t0, t1)) = param_range(p1, &dx, &dy, w, Some((Rational::zero(), one()))) else {
        return ExactClipOutcome::Reject { grazing: line_single_point };
    };

    let at = |t: &Rational| ExactPoint::new(&p1.x + &dx * t, &p1.y + &dy * t);
    let (a, b) = (at(&t0), at(&t1));
    let single_point = a == b;
    let grazing = single_point || line_single_point || lies_on_boundary_line(&a, &b, w);
    ExactClipOutcome::Accept { p1: a, p2: b, grazing }
}

/// Convenience wrapper lifting double inputs exactly.
pub fn clip_exact_f64(seg: &Segment, w: &ClipWindow) -> ExactClipOutcome {
    clip_exact(&ExactSegment::from_f64(seg), &ExactWindow::from_f64(w))
}

/// Rounds an exact outcome to doubles; accept/reject is preserved.
pub fn to_double_outcome(o: &ExactClipOutcome) -> ClipResult {
    match o {
        ExactClipOutcome::Accept { p1, p2, .. } => ClipResult::Accepted(Segment::new(p1.to_f64(), p2.to_f64())),
        ExactClipOutcome::Reject { .. } => ClipResult::Rejected,
    }
}

fn one() -> Rational {
    Rational::from_integer(BigInt::from(1))
}

/// Intersects `bounds` (or the whole real line when `None`) with the set of
/// `t` where `p + t*d` lies in the closed window.
fn param_range(
    p: &ExactPoint,
    dx: &Rational,
    dy: &Rational,
    w: &ExactWindow,
    bounds: Option<(Rational, Rational)>,
) -> Option<(Rational, Rational)> {
    let mut lo: Option<Rational> = bounds.as_ref().map(|b| b.0.clone());
    let mut hi: Option<Rational> = bounds.map(|b| b.1);

    for (start, d, min, max) in [(&p.x, dx, &w.xmin, &w.xmax), (&p.y, dy, &w.ymin, &w.ymax)] {
        if d.is_zero() {
            if start < min || start > max {
                return None;
            }
            continue;
        }
        let ta = (min - start) / d;
        let tb = (max - start) / d;
        let (enter, leave) = if d.is_positive() { (ta, tb) } else { (tb, ta) };
        if lo.as_ref().is_none_or(|l| enter > *l) {
            lo = Some(enter);
        }
        if hi.as_ref().is_none_or(|h| leave < *h) {
            hi = Some(leave);
        }
    }

    match (lo, hi) {
        (Some(l), Some(h)) if l > h => None,
        (Some(l), Some(h)) => Some((l, h)),
        // both directions zero: the single point p, already known inside
        _ => Some((Rational::zero(), Rational::zero())),
    }
}

enum Contact {
    None,
    Point,
    Chord,
}

/// How the infinite supporting line meets the closed window. Degenerate
/// segments are treated as a point.
fn line_window_contact(p: &ExactPoint, dx: &Rational, dy: &Rational, w: &ExactWindow) -> Contact {
    if dx.is_zero() && dy.is_zero() {
        return if w.contains(p) { Contact::Point } else { Contact::None };
    }
    match param_range(p, dx, dy, w, None) {
        None => Contact::None,
        Some((l, h)) if l == h => Contact::Point,
        Some(_) => Contact::Chord,
    }
}

fn lies_on_boundary_line(a: &ExactPoint, b: &ExactPoint, w: &ExactWindow) -> bool {
    (a.x == b.x && (a.x == w.xmin || a.x == w.xmax)) || (a.y == b.y && (a.y == w.ymin || a.y == w.ymax))
}
