//! Core geometric values shared by every clipper.
//!
//! Coordinates are `f64`. A [`ClipWindow`] is boundary-inclusive: points on
//! an edge or corner are inside.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("coordinate is not finite: {0}")]
    NonFinite(f64),
    #[error("invalid window: require xmin < xmax and ymin < ymax, got ({xmin}, {ymin}, {xmax}, {ymax})")]
    InvalidWindow { xmin: f64, ymin: f64, xmax: f64, ymax: f64 },
}

fn finite(v: f64) -> Result<f64, GeomError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(GeomError::NonFinite(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Checked constructor for values coming from outside the library.
    pub fn try_new(x: f64, y: f64) -> Result<Self, GeomError> {
        Ok(Point2 { x: finite(x)?, y: finite(y)? })
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// A directed segment from `p1` to `p2`. `p1 == p2` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Segment {
    pub p1: Point2,
    pub p2: Point2,
}

impl Segment {
    #[inline]
    pub const fn new(p1: Point2, p2: Point2) -> Self {
        Segment { p1, p2 }
    }

    #[inline]
    pub const fn from_coords(x1: f64, y1: f64, x2: f64, y2: f64) -> Self {
        Segment { p1: Point2::new(x1, y1), p2: Point2::new(x2, y2) }
    }

    pub fn try_from_coords(x1: f64, y1: f64, x2: f64, y2: f64) -> Result<Self, GeomError> {
        Ok(Segment { p1: Point2::try_new(x1, y1)?, p2: Point2::try_new(x2, y2)? })
    }

    pub fn is_degenerate(&self) -> bool {
        self.p1 == self.p2
    }

    pub fn is_finite(&self) -> bool {
        self.p1.is_finite() && self.p2.is_finite()
    }

    pub fn line(&self) -> LineEquation {
        LineEquation::through(self)
    }
}

/// Axis-aligned, boundary-inclusive clipping rectangle.
///
/// Bounds are never reordered: `xmin >= xmax` or `ymin >= ymax` is an error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WindowBounds", into = "WindowBounds")]
pub struct ClipWindow {
    xmin: f64,
    ymin: f64,
    xmax: f64,
    ymax: f64,
}

#[derive(Serialize, Deserialize)]
struct WindowBounds {
    xmin: f64,
    ymin: f64,
    xmax: f64,
    ymax: f64,
}

impl TryFrom<WindowBounds> for ClipWindow {
    type Error = GeomError;

    fn try_from(b: WindowBounds) -> Result<Self, Self::Error> {
        ClipWindow::new(b.xmin, b.ymin, b.xmax, b.ymax)
    }
}

impl From<ClipWindow> for WindowBounds {
    fn from(w: ClipWindow) -> Self {
        WindowBounds { xmin: w.xmin, ymin: w.ymin, xmax: w.xmax, ymax: w.ymax }
    }
}

impl ClipWindow {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Result<Self, GeomError> {
        for v in [xmin, ymin, xmax, ymax] {
            finite(v)?;
        }
        if !(xmin < xmax && ymin < ymax) {
            return Err(GeomError::InvalidWindow { xmin, ymin, xmax, ymax });
        }
        Ok(ClipWindow { xmin, ymin, xmax, ymax })
    }

    #[inline]
    pub fn xmin(&self) -> f64 {
        self.xmin
    }
    #[inline]
    pub fn ymin(&self) -> f64 {
        self.ymin
    }
    #[inline]
    pub fn xmax(&self) -> f64 {
        self.xmax
    }
    #[inline]
    pub fn ymax(&self) -> f64 {
        self.ymax
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    /// Corners in counter-clockwise order starting at bottom-left.
    pub fn corners(&self) -> [Point2; 4] {
        [
            Point2::new(self.xmin, self.ymin),
            Point2::new(self.xmax, self.ymin),
            Point2::new(self.xmax, self.ymax),
            Point2::new(self.xmin, self.ymax),
        ]
    }

    #[inline]
    pub fn contains(&self, p: Point2) -> bool {
        contains(self, p)
    }

    /// True when `other` lies inside `self` (shared edges allowed).
    pub fn encloses(&self, other: &ClipWindow) -> bool {
        self.xmin <= other.xmin && other.xmax <= self.xmax && self.ymin <= other.ymin && other.ymax <= self.ymax
    }
}

/// Boundary-inclusive containment: `xmin <= x <= xmax` and `ymin <= y <= ymax`.
#[inline]
pub fn contains(window: &ClipWindow, p: Point2) -> bool {
    p.x >= window.xmin && p.x <= window.xmax && p.y >= window.ymin && p.y <= window.ymax
}

/// A line through a segment's first endpoint, stored as coordinate
/// differences so vertical lines never produce an infinite slope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineEquation {
    pub origin: Point2,
    pub dx: f64,
    pub dy: f64,
}

impl LineEquation {
    pub fn through(seg: &Segment) -> Self {
        LineEquation { origin: seg.p1, dx: seg.p2.x - seg.p1.x, dy: seg.p2.y - seg.p1.y }
    }

    /// `dy / dx`, or `None` for a vertical line.
    pub fn slope(&self) -> Option<f64> {
        (self.dx != 0.0).then(|| self.dy / self.dx)
    }
}

/// `y = y1 + (dy/dx)(x - x1)`. The caller guarantees `dx != 0`.
#[inline]
pub fn y_at(line: &LineEquation, x: f64) -> f64 {
    debug_assert!(line.dx != 0.0, "y_at on a vertical line");
    line.origin.y + (line.dy / line.dx) * (x - line.origin.x)
}

/// `x = x1 + (dx/dy)(y - y1)`. The caller guarantees `dy != 0`.
#[inline]
pub fn x_at(line: &LineEquation, y: f64) -> f64 {
    debug_assert!(line.dy != 0.0, "x_at on a horizontal line");
    line.origin.x + (line.dx / line.dy) * (y - line.origin.y)
}

/// Outcome of clipping one segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ClipResult {
    Accepted(Segment),
    Rejected,
}

impl ClipResult {
    pub fn is_accepted(&self) -> bool {
        matches!(self, ClipResult::Accepted(_))
    }

    pub fn segment(&self) -> Option<Segment> {
        match self {
            ClipResult::Accepted(s) => Some(*s),
            ClipResult::Rejected => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_window() -> ClipWindow {
        ClipWindow::new(-100.0, -75.0, 100.0, 75.0).unwrap()
    }

    fn line(x1: f64, y1: f64, x2: f64, y2: f64) -> LineEquation {
        Segment::from_coords(x1, y1, x2, y2).line()
    }

    #[test]
    fn y_at_examples() {
        assert_eq!(y_at(&line(0.0, 0.0, 400.0, 400.0), -100.0), -100.0);
        assert_eq!(y_at(&line(-200.0, 0.0, 0.0, 200.0), -100.0), 100.0);
        assert_eq!(y_at(&line(-200.0, 0.0, 200.0, 80.0), -100.0), 20.0);
    }

    #[test]
    fn x_at_examples() {
        assert_eq!(x_at(&line(0.0, 0.0, 400.0, 400.0), 75.0), 75.0);
        assert_eq!(x_at(&line(-200.0, 200.0, 0.0, 0.0), 75.0), -75.0);
        assert_eq!(x_at(&line(-200.0, -200.0, 200.0, 200.0), -75.0), -75.0);
    }

    #[test]
    fn containment_is_boundary_inclusive() {
        let w = default_window();
        assert!(contains(&w, Point2::new(0.0, 0.0)));
        assert!(contains(&w, Point2::new(-100.0, 75.0)));
        assert!(!contains(&w, Point2::new(-100.0001, 0.0)));
        for c in w.corners() {
            assert!(w.contains(c));
        }
    }

    #[test]
    fn window_rejects_unordered_or_empty_bounds() {
        assert!(matches!(ClipWindow::new(1.0, 0.0, 1.0, 5.0), Err(GeomError::InvalidWindow { .. })));
        assert!(matches!(ClipWindow::new(0.0, 5.0, 1.0, -5.0), Err(GeomError::InvalidWindow { .. })));
        assert!(matches!(ClipWindow::new(0.0, 0.0, f64::INFINITY, 1.0), Err(GeomError::NonFinite(_))));
        assert!(matches!(ClipWindow::new(f64::NAN, 0.0, 1.0, 1.0), Err(GeomError::NonFinite(_))));
    }

    #[test]
    fn window_serde_validates() {
        let w: Result<ClipWindow, _> = serde_json::from_str(r#"{"xmin":1.0,"ymin":0.0,"xmax":0.0,"ymax":1.0}"#);
        assert!(w.is_err());
        let w = default_window();
        let back: ClipWindow = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(w, back);
    }

    #[test]
    fn slope_is_not_materialized_for_vertical_lines() {
        assert_eq!(line(3.0, 0.0, 3.0, 7.0).slope(), None);
        assert_eq!(line(0.0, 0.0, 2.0, 1.0).slope(), Some(0.5));
    }

    #[test]
    fn checked_constructors_reject_non_finite() {
        assert!(Point2::try_new(f64::NAN, 0.0).is_err());
        assert!(Segment::try_from_coords(0.0, 0.0, 1.0, f64::NEG_INFINITY).is_err());
        assert!(Segment::try_from_coords(0.0, 0.0, 1.0, 2.0).is_ok());
    }
}
