use crate::geom::{ClipResult, ClipWindow, Point2, Segment};

/// Same-side rejection, then clamp each endpoint onto the window using the
/// two explicit forms of the line equation, then a final horizontal
/// same-side check.
///
/// Every update reads the original endpoints, never the partially clipped
/// ones. The slope `(y2-y1)/(x2-x1)` is only evaluated after an x clamp,
/// which the first step makes impossible for vertical segments; likewise
/// `(x2-x1)/(y2-y1)` for horizontal ones.
pub fn clip_proposed(seg: Segment, w: &ClipWindow) -> ClipResult {
    let (x1, y1, x2, y2) = (seg.p1.x, seg.p1.y, seg.p2.x, seg.p2.y);
    let (xmin, ymin, xmax, ymax) = (w.xmin(), w.ymin(), w.xmax(), w.ymax());

    if (x1 < xmin && x2 < xmin) || (x1 > xmax && x2 > xmax) {
        return ClipResult::Rejected;
    }
    if (y1 < ymin && y2 < ymin) || (y1 > ymax && y2 > ymax) {
        return ClipResult::Rejected;
    }

    let mut x = [x1, x2];
    let mut y = [y1, y2];
    for i in 0..2 {
        if x[i] < xmin {
            x[i] = xmin;
            y[i] = ((y2 - y1) / (x2 - x1)) * (xmin - x1) + y1;
        } else if x[i] > xmax {
            x[i] = xmax;
            y[i] = ((y2 - y1) / (x2 - x1)) * (xmax - x1) + y1;
        }
        if y[i] < ymin {
            y[i] = ymin;
            x[i] = ((x2 - x1) / (y2 - y1)) * (ymin - y1) + x1;
        } else if y[i] > ymax {
            y[i] = ymax;
            x[i] = ((x2 - x1) / (y2 - y1)) * (ymax - y1) + x1;
        }
    }

    if (x[0] < xmin && x[1] < xmin) || (x[0] > xmax && x[1] > xmax) {
        return ClipResult::Rejected;
    }
    ClipResult::Accepted(Segment::new(Point2::new(x[0], y[0]), Point2::new(x[1], y[1])))
}
