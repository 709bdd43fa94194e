//! Cross-checks the clippers against the exact oracle.
//!
//! Each case is clipped once exactly and once per algorithm. A result
//! matches when accept/reject agrees and every coordinate is within the
//! tolerance of the correctly rounded exact endpoint. Cases the oracle marks
//! as grazing may disagree, but an accepted answer must still lie inside the
//! window and on the input segment.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bench::{fill_segments, SplitMix64};
use crate::clip::{AlgorithmId, ClipFn};
use crate::geom::{ClipResult, ClipWindow, Point2, Segment};
use crate::oracle::{clip_exact_f64, to_double_outcome};

/// Failing cases echoed in a report.
pub const MAX_ECHOED_FAILURES: usize = 10;

const RANDOM_CHUNK: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub cases: usize,
    pub seed: u64,
    pub space: ClipWindow,
    pub window: ClipWindow,
    pub tolerance: f64,
    pub adversarial: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cases: 100_000,
            seed: 1,
            space: ClipWindow::new(-960.0, -720.0, 960.0, 720.0).expect("valid space"),
            window: ClipWindow::new(-100.0, -75.0, 100.0, 75.0).expect("valid window"),
            tolerance: 1e-9,
            adversarial: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseId {
    Adversarial(usize),
    Random(usize),
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::Adversarial(i) => write!(f, "adversarial #{i}"),
            CaseId::Random(i) => write!(f, "random #{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Match,
    GrazingExempt,
    Mismatch(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub algorithm: String,
    pub case: CaseId,
    pub segment: Segment,
    pub got: ClipResult,
    pub expected: ClipResult,
    pub reason: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.segment;
        write!(
            f,
            "MISMATCH {} {}: seg {} {} {} {} got {} expected {} ({})",
            self.algorithm,
            self.case,
            s.p1.x,
            s.p1.y,
            s.p2.x,
            s.p2.y,
            show(&self.got),
            show(&self.expected),
            self.reason
        )
    }
}

fn show(r: &ClipResult) -> String {
    match r {
        ClipResult::Accepted(s) => format!("ACCEPT {} {} {} {}", s.p1.x, s.p1.y, s.p2.x, s.p2.y),
        ClipResult::Rejected => "REJECT".to_string(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub matched: u64,
    pub grazing_exempt: u64,
    pub mismatched: u64,
}

impl Tally {
    fn add(&mut self, other: &Tally) {
        self.matched += other.matched;
        self.grazing_exempt += other.grazing_exempt;
        self.mismatched += other.mismatched;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub adversarial_cases: usize,
    /// Random cases the oracle classifies as grazing.
    pub random_grazing: u64,
    pub tallies: Vec<(String, Tally)>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn total_cases(&self) -> usize {
        self.config.cases + self.adversarial_cases
    }

    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|(_, t)| t.mismatched == 0)
    }

    pub fn random_grazing_fraction(&self) -> f64 {
        if self.config.cases == 0 {
            0.0
        } else {
            self.random_grazing as f64 / self.config.cases as f64
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cases: {} random (seed {}) + {} adversarial, tolerance {:e}",
            self.config.cases, self.config.seed, self.adversarial_cases, self.config.tolerance
        )?;
        writeln!(f, "grazing random cases: {} ({:.4}%)", self.random_grazing, 100.0 * self.random_grazing_fraction())?;
        for (name, t) in &self.tallies {
            writeln!(f, "{name}: {} match, {} grazing-exempt, {} MISMATCH", t.matched, t.grazing_exempt, t.mismatched)?;
        }
        for fail in &self.failures {
            writeln!(f, "{fail}")?;
        }
        Ok(())
    }
}

/// All seven algorithms under their report names.
pub fn all_algorithms() -> Vec<(String, ClipFn)> {
    AlgorithmId::ALL.iter().map(|a| (a.name().to_string(), a.clip_fn())).collect()
}

pub fn run_verify(config: &VerifyConfig) -> VerifyReport {
    verify_with(config, &all_algorithms())
}

/// Runs the comparison for an arbitrary list of clippers.
pub fn verify_with(config: &VerifyConfig, algorithms: &[(String, ClipFn)]) -> VerifyReport {
    let w = &config.window;
    let n = algorithms.len();
    let mut tallies = vec![Tally::default(); n];
    let mut failures = Vec::new();
    let mut random_grazing = 0;

    let adversarial = if config.adversarial { adversarial_suite(w) } else { Vec::new() };
    let cases = adversarial.iter().enumerate().map(|(i, s)| (CaseId::Adversarial(i), *s)).collect::<Vec<_>>();
    let mut absorb = |batch: &[(CaseId, Segment)]| {
        let part = check_batch(batch, w, config.tolerance, algorithms);
        for (t, p) in tallies.iter_mut().zip(&part.tallies) {
            t.add(p);
        }
        for f in part.failures {
            if failures.len() < MAX_ECHOED_FAILURES {
                failures.push(f);
            }
        }
        part.grazing
    };
    absorb(&cases);

    let mut rng = SplitMix64::new(config.seed);
    let mut buf = Vec::with_capacity(RANDOM_CHUNK.min(config.cases));
    let mut done = 0;
    while done < config.cases {
        let count = RANDOM_CHUNK.min(config.cases - done);
        fill_segments(&mut rng, &config.space, &mut buf, count);
        let batch: Vec<_> = buf.iter().enumerate().map(|(i, s)| (CaseId::Random(done + i), *s)).collect();
        random_grazing += absorb(&batch);
        done += count;
    }

    VerifyReport {
        config: config.clone(),
        adversarial_cases: adversarial.len(),
        random_grazing,
        tallies: algorithms.iter().map(|(name, _)| name.clone()).zip(tallies).collect(),
        failures,
    }
}

struct BatchResult {
    tallies: Vec<Tally>,
    failures: Vec<Failure>,
    grazing: u64,
}

fn check_batch(batch: &[(CaseId, Segment)], w: &ClipWindow, tol: f64, algorithms: &[(String, ClipFn)]) -> BatchResult {
    let per_case: Vec<(bool, Vec<Verdict>, ClipResult, Vec<ClipResult>)> = batch
        .par_iter()
        .map(|&(_, seg)| {
            let exact = clip_exact_f64(&seg, w);
            let expected = to_double_outcome(&exact);
            let got: Vec<ClipResult> = algorithms.iter().map(|(_, f)| f(seg, w)).collect();
            let verdicts = got.iter().map(|g| judge(seg, w, g, &expected, exact.grazing(), tol)).collect();
            (exact.grazing(), verdicts, expected, got)
        })
        .collect();

    let mut out = BatchResult { tallies: vec![Tally::default(); algorithms.len()], failures: Vec::new(), grazing: 0 };
    for ((case, seg), (grazing, verdicts, expected, got)) in batch.iter().zip(per_case) {
        out.grazing += grazing as u64;
        for (k, v) in verdicts.into_iter().enumerate() {
            let t = &mut out.tallies[k];
            match v {
                Verdict::Match => t.matched += 1,
                Verdict::GrazingExempt => t.grazing_exempt += 1,
                Verdict::Mismatch(reason) => {
                    t.mismatched += 1;
                    if out.failures.len() < MAX_ECHOED_FAILURES {
                        out.failures.push(Failure {
                            algorithm: algorithms[k].0.clone(),
                            case: *case,
                            segment: *seg,
                            got: got[k],
                            expected,
                            reason,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Classifies one clipper answer against the rounded exact answer.
pub fn judge(
    seg: Segment,
    w: &ClipWindow,
    got: &ClipResult,
    expected: &ClipResult,
    grazing: bool,
    tol: f64,
) -> Verdict {
    let agreement = match (got, expected) {
        _ if results_close(got, expected, tol) => Ok(()),
        (ClipResult::Accepted(g), ClipResult::Accepted(e)) => {
            let worst = [g.p1.x - e.p1.x, g.p1.y - e.p1.y, g.p2.x - e.p2.x, g.p2.y - e.p2.y]
                .into_iter()
                .map(f64::abs)
                .fold(0.0, f64::max);
            Err(format!("endpoint off by {worst:e}"))
        }
        (ClipResult::Accepted(_), _) => Err("accepted a rejected segment".to_string()),
        _ => Err("rejected an accepted segment".to_string()),
    };
    match agreement {
        Ok(()) => Verdict::Match,
        Err(reason) if !grazing => Verdict::Mismatch(reason),
        Err(_) => match got {
            ClipResult::Rejected => Verdict::GrazingExempt,
            ClipResult::Accepted(r) => match check_clipped(seg, w, *r) {
                Ok(()) => Verdict::GrazingExempt,
                Err(reason) => Verdict::Mismatch(format!("grazing case: {reason}")),
            },
        },
    }
}

/// Geometric sanity of an accepted answer, independent of any oracle:
/// both endpoints lie in the (slightly widened) window, on the input
/// segment, and in the segment's direction.
pub fn check_clipped(seg: Segment, w: &ClipWindow, r: Segment) -> Result<(), String> {
    let slack = 1e-9 * w.width().max(w.height()).max(1.0);
    for p in [r.p1, r.p2] {
        if !p.is_finite() {
            return Err(format!("non-finite endpoint {p:?}"));
        }
        let inside =
            p.x >= w.xmin() - slack && p.x <= w.xmax() + slack && p.y >= w.ymin() - slack && p.y <= w.ymax() + slack;
        if !inside {
            return Err(format!("endpoint {p:?} outside the window"));
        }
    }

    if seg.is_degenerate() {
        return if r.p1 == seg.p1 && r.p2 == seg.p1 { Ok(()) } else { Err("point segment was moved".to_string()) };
    }

    let scale = [seg.p1.x, seg.p1.y, seg.p2.x, seg.p2.y].into_iter().map(f64::abs).fold(1.0, f64::max);
    for p in [r.p1, r.p2] {
        let off = distance_to_line(seg, p);
        if off > 1e-6 * scale {
            return Err(format!("endpoint {p:?} is {off:e} off the segment line"));
        }
    }
    let (ta, tb) = (parameter_of(seg, r.p1), parameter_of(seg, r.p2));
    if !(-1e-9..=1.0 + 1e-9).contains(&ta) || !(-1e-9..=1.0 + 1e-9).contains(&tb) {
        return Err(format!("parameters {ta}, {tb} outside [0, 1]"));
    }
    if ta > tb + 1e-9 {
        return Err(format!("direction reversed ({ta} > {tb})"));
    }
    Ok(())
}

/// Oracle-free properties of one clipper on one case.
///
/// Any accepted answer must pass [`check_clipped`], here and for the mirrored
/// inputs. Unless the oracle flags `seg` as grazing, the answer must also be
/// stable under re-clipping and commute with mirroring in both axes.
pub fn check_invariants(f: ClipFn, seg: Segment, w: &ClipWindow, grazing: bool, tol: f64) -> Result<(), String> {
    let r = f(seg, w);
    if let ClipResult::Accepted(s) = r {
        check_clipped(seg, w, s)?;
        if !grazing {
            let again = f(s, w);
            if !results_close(&again, &r, tol) {
                return Err(format!("not idempotent: {} then {}", show(&r), show(&again)));
            }
        }
    }
    for (axis, mirror) in [("x", mirror_x as fn(Point2) -> Point2), ("y", mirror_y)] {
        let ms = Segment::new(mirror(seg.p1), mirror(seg.p2));
        let (a, b) = (mirror(Point2::new(w.xmin(), w.ymin())), mirror(Point2::new(w.xmax(), w.ymax())));
        let mw = ClipWindow::new(a.x.min(b.x), a.y.min(b.y), a.x.max(b.x), a.y.max(b.y)).expect("mirrored window");
        let mr = f(ms, &mw);
        if let ClipResult::Accepted(s) = mr {
            check_clipped(ms, &mw, s).map_err(|e| format!("{axis}-mirror: {e}"))?;
        }
        let back = match mr {
            ClipResult::Accepted(s) => ClipResult::Accepted(Segment::new(mirror(s.p1), mirror(s.p2))),
            ClipResult::Rejected => ClipResult::Rejected,
        };
        if !grazing && !results_close(&back, &r, tol) {
            return Err(format!("{axis}-mirror gives {} against {}", show(&back), show(&r)));
        }
    }
    Ok(())
}

fn mirror_x(p: Point2) -> Point2 {
    Point2::new(p.x, -p.y)
}

fn mirror_y(p: Point2) -> Point2 {
    Point2::new(-p.x, p.y)
}

/// Same accept/reject and every coordinate within `tol`.
pub fn results_close(a: &ClipResult, b: &ClipResult, tol: f64) -> bool {
    match (a, b) {
        (ClipResult::Rejected, ClipResult::Rejected) => true,
        (ClipResult::Accepted(s), ClipResult::Accepted(t)) => {
            [s.p1.x - t.p1.x, s.p1.y - t.p1.y, s.p2.x - t.p2.x, s.p2.y - t.p2.y].iter().all(|d| d.abs() <= tol)
        }
        _ => false,
    }
}

/// Perpendicular distance from `p` to the line through `seg`.
pub fn distance_to_line(seg: Segment, p: Point2) -> f64 {
    let (dx, dy) = (seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y);
    ((p.x - seg.p1.x) * dy - (p.y - seg.p1.y) * dx).abs() / dx.hypot(dy)
}

/// Position of `p` along `seg`, measured on the dominant axis.
pub fn parameter_of(seg: Segment, p: Point2) -> f64 {
    let (dx, dy) = (seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y);
    if dx.abs() >= dy.abs() {
        (p.x - seg.p1.x) / dx
    } else {
        (p.y - seg.p1.y) / dy
    }
}

/// Hand-built cases placed relative to the window: point segments,
/// axis-parallel spans, segments along the edges, lines touching or crossing
/// corners, segments ending on the boundary, short steep segments across an
/// edge, and far-away long segments.
/// Every non-degenerate case also appears reversed.
pub fn adversarial_suite(w: &ClipWindow) -> Vec<Segment> {
    let (x0, y0, x1, y1) = (w.xmin(), w.ymin(), w.xmax(), w.ymax());
    let (ww, hh) = (w.width(), w.height());
    let (cx, cy) = (x0 + ww / 2.0, y0 + hh / 2.0);
    let xs = [x0 - ww, x0, cx, x1, x1 + ww];
    let ys = [y0 - hh, y0, cy, y1, y1 + hh];
    let seg = Segment::from_coords;

    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            out.push(seg(x, y, x, y));
        }
    }
    for (x, y) in [(x0.next_down(), cy), (x1.next_up(), cy), (cx, y0.next_down()), (cx, y1.next_up())] {
        out.push(seg(x, y, x, y));
    }

    let mut directed = Vec::new();
    let spans = |lo: f64, hi: f64, mid: f64, len: f64| {
        [
            (lo - len, hi + len),
            (mid, hi + len),
            (lo - 2.0 * len, lo - len),
            (lo - len, lo),
            (lo, hi),
            (lo, mid),
            (hi, hi + len),
            (mid, mid + len / 1024.0),
        ]
    };
    for &y in &ys {
        for (a, b) in spans(x0, x1, cx, ww) {
            directed.push(seg(a, y, b, y));
        }
    }
    for &x in &xs {
        for (a, b) in spans(y0, y1, cy, hh) {
            directed.push(seg(x, a, x, b));
        }
    }

    // lines through a single corner, heading away from the window on both sides
    let a = ww.min(hh) / 2.0;
    for (corner, (sx, sy)) in w.corners().into_iter().zip([(1.0, -1.0), (1.0, 1.0), (1.0, -1.0), (1.0, 1.0)]) {
        for (kx, ky) in [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)] {
            let (dx, dy) = (sx * kx * a, sy * ky * a);
            directed.push(seg(corner.x - dx, corner.y - dy, corner.x + dx, corner.y + dy));
            directed.push(seg(corner.x - dx, corner.y - dy, corner.x, corner.y));
            directed.push(seg(corner.x, corner.y, corner.x + dx, corner.y + dy));
        }
    }

    // lines through corners that do enter the window
    let c = w.corners();
    for (p, q) in [(c[0], c[2]), (c[1], c[3])] {
        let (dx, dy) = (q.x - p.x, q.y - p.y);
        directed.push(seg(p.x, p.y, q.x, q.y));
        directed.push(seg(p.x - dx, p.y - dy, q.x + dx, q.y + dy));
        directed.push(seg(p.x - dx / 2.0, p.y - dy / 2.0, cx, cy));
        directed.push(seg(p.x - dx, p.y - dy, p.x, p.y));
    }
    for corner in c {
        directed.push(seg(corner.x, corner.y, cx, cy));
        directed.push(seg(corner.x, corner.y, 2.0 * cx - corner.x + (cx - corner.x), cy));
    }

    // endpoints on the boundary
    for (mx, my) in [(cx, y0), (x1, cy), (cx, y1), (x0, cy)] {
        directed.push(seg(mx, my, cx + ww / 8.0, cy + hh / 8.0));
        directed.push(seg(mx, my, 2.0 * mx - cx + ww / 8.0, 2.0 * my - cy + hh / 8.0));
    }

    // short, nearly perpendicular segments straddling each edge
    let e = 1e-6 * ww.max(hh).max(1.0);
    for (y_lo, y_hi) in [(cy - hh / 4.0, y1 + hh / 4.0), (y0 + hh / 8.0, cy)] {
        directed.push(seg(x0 - e, y_lo, x0 + e, y_hi));
        directed.push(seg(x1 + e, y_lo, x1 - e, y_hi));
    }
    for (x_lo, x_hi) in [(cx - ww / 4.0, x1 + ww / 4.0), (x0 + ww / 8.0, cx)] {
        directed.push(seg(x_lo, y0 - e, x_hi, y0 + e));
        directed.push(seg(x_lo, y1 + e, x_hi, y1 - e));
    }

    // long segments from far away
    let far = 1000.0 * ww.max(hh);
    directed.push(seg(cx - far, cy - far / 3.0, cx + far, cy + far / 3.0));
    directed.push(seg(cx - far / 5.0, cy + far, cx + far / 7.0, cy - far));
    directed.push(seg(cx - far, cy + far, cx + far, cy + far / 2.0));

    for s in directed {
        out.push(s);
        out.push(Segment::new(s.p2, s.p1));
    }
    out
}
