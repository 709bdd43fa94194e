use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

/// Parameter range `[t_enter, t_exit]` of `P(t) = p1 + t (p2 - p1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamInterval {
    pub t_enter: f64,
    pub t_exit: f64,
}

impl ParamInterval {
    pub const FULL: ParamInterval = ParamInterval { t_enter: 0.0, t_exit: 1.0 };

    /// Restrict by the half-plane `p * t <= q`. Returns `false` once empty.
    #[inline]
    pub(crate) fn restrict(&mut self, p: f64, q: f64) -> bool {
        if p == 0.0 {
            // parallel to this edge: all or nothing
            return q >= 0.0;
        }
        let r = q / p;
        if p < 0.0 {
            if r > self.t_exit {
                return false;
            }
            if r > self.t_enter {
                self.t_enter = r;
            }
        } else {
            if r < self.t_enter {
                return false;
            }
            if r < self.t_exit {
                self.t_exit = r;
            }
        }
        true
    }

    /// Endpoints of the interval on `seg`. Untouched ends are returned as the
    /// original endpoints bit for bit.
    pub(crate) fn apply(&self, seg: &Segment) -> Segment {
        let (dx, dy) = (seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y);
        let at = |t: f64| Point2::new(seg.p1.x + t * dx, seg.p1.y + t * dy);
        let a = if self.t_enter == 0.0 { seg.p1 } else { at(self.t_enter) };
        let b = if self.t_exit == 1.0 { seg.p2 } else { at(self.t_exit) };
        Segment::new(a, b)
    }
}

/// Parametric clipping with the four `(p_k, q_k)` inequalities for the
/// left, right, bottom and top edges.
pub fn clip_liang_barsky(seg: Segment, w: &ClipWindow) -> ClipResult {
    let (x1, y1) = (seg.p1.x, seg.p1.y);
    let dx = seg.p2.x - x1;
    let dy = seg.p2.y - y1;

    let constraints = [(-dx, x1 - w.xmin()), (dx, w.xmax() - x1), (-dy, y1 - w.ymin()), (dy, w.ymax() - y1)];

    let mut range = ParamInterval::FULL;
    for (p, q) in constraints {
        if !range.restrict(p, q) {
            return ClipResult::Rejected;
        }
    }
    ClipResult::Accepted(range.apply(&seg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> ClipWindow {
        ClipWindow::new(-100.0, -75.0, 100.0, 75.0).unwrap()
    }

    #[test]
    fn interval_restriction() {
        let mut r = ParamInterval::FULL;
        assert!(r.restrict(-400.0, -100.0)); // enters at t = 0.25
        assert!(r.restrict(400.0, 300.0)); // leaves at t = 0.75
        assert_eq!(r, ParamInterval { t_enter: 0.25, t_exit: 0.75 });
        assert!(!r.restrict(-1.0, -0.9)); // would enter after leaving
        let mut r = ParamInterval::FULL;
        assert!(!r.restrict(0.0, -1.0));
        assert!(r.restrict(0.0, 0.0));
    }

    #[test]
    fn parallel_outside_rejects_immediately() {
        let got = clip_liang_barsky(Segment::from_coords(-500.0, 80.0, 500.0, 80.0), &w());
        assert_eq!(got, ClipResult::Rejected);
    }

    #[test]
    fn parallel_on_edge_is_kept() {
        let got = clip_liang_barsky(Segment::from_coords(-100.0, -500.0, -100.0, 500.0), &w());
        assert_eq!(got, ClipResult::Accepted(Segment::from_coords(-100.0, -75.0, -100.0, 75.0)));
    }
}
