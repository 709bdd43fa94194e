use lineclip_core::oracle::{clip_exact_f64, to_double_outcome};
use lineclip_core::verify::{adversarial_suite, check_invariants, judge, results_close, Verdict};
use lineclip_core::{clip, AlgorithmId, ClipResult, ClipWindow, Segment};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn default_window() -> ClipWindow {
    ClipWindow::new(-100.0, -75.0, 100.0, 75.0).unwrap()
}

fn window() -> impl Strategy<Value = ClipWindow> {
    (-500.0..500.0f64, -500.0..500.0f64, 1e-2..1000.0f64, 1e-2..1000.0f64)
        .prop_map(|(x, y, w, h)| ClipWindow::new(x, y, x + w, y + h).unwrap())
}

/// Mostly window-derived values, so that boundary hits, axis-parallel
/// segments and corner contacts are common.
fn snapped(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    let span = hi - lo;
    prop_oneof![
        Just(lo),
        Just(hi),
        Just(lo + span / 2.0),
        Just(lo - span),
        Just(hi + span),
        Just(lo - span / 2.0),
        (lo - 3.0 * span..hi + 3.0 * span),
    ]
}

fn snapped_segment(w: ClipWindow) -> impl Strategy<Value = Segment> {
    let xs = || snapped(w.xmin(), w.xmax());
    let ys = || snapped(w.ymin(), w.ymax());
    (xs(), ys(), xs(), ys()).prop_map(|(a, b, c, d)| Segment::from_coords(a, b, c, d))
}

/// Whether the exact accept/reject survives growing or shrinking the window
/// by a relative 1e-12. Inputs built from window coordinates can land within
/// rounding of a corner without touching it exactly; no double-precision
/// clipper can be held to the exact decision there.
fn well_conditioned(seg: Segment, w: &ClipWindow) -> bool {
    let scale = [seg.p1.x, seg.p1.y, seg.p2.x, seg.p2.y, w.xmin(), w.ymin(), w.xmax(), w.ymax()]
        .into_iter()
        .map(f64::abs)
        .fold(1.0, f64::max);
    let d = 1e-12 * scale;
    let grown = ClipWindow::new(w.xmin() - d, w.ymin() - d, w.xmax() + d, w.ymax() + d).unwrap();
    let Ok(shrunk) = ClipWindow::new(w.xmin() + d, w.ymin() + d, w.xmax() - d, w.ymax() - d) else {
        return false;
    };
    clip_exact_f64(&seg, &grown).is_accept() == clip_exact_f64(&seg, &shrunk).is_accept()
}

fn check_all(seg: Segment, w: &ClipWindow) -> Result<(), String> {
    check_cases(seg, w, false)
}

/// With `lenient`, ill-conditioned inputs only get the oracle-free checks.
fn check_cases(seg: Segment, w: &ClipWindow, lenient: bool) -> Result<(), String> {
    let exact = clip_exact_f64(&seg, w);
    let expected = to_double_outcome(&exact);
    let grazing = exact.grazing() || (lenient && !well_conditioned(seg, w));
    let mut answers = Vec::new();
    for alg in AlgorithmId::ALL {
        let f = alg.clip_fn();
        check_invariants(f, seg, w, grazing, TOL).map_err(|e| format!("{alg} on {seg:?}: {e}"))?;
        let got = clip(alg, seg, w);
        if let Verdict::Mismatch(e) = judge(seg, w, &got, &expected, grazing, TOL) {
            return Err(format!("{alg} on {seg:?}: {e}"));
        }
        answers.push((alg, got));
    }
    if !grazing {
        let (first, a) = answers[0];
        for (alg, b) in &answers[1..] {
            if !results_close(&a, b, 2.0 * TOL) {
                return Err(format!("{first} and {alg} disagree on {seg:?}: {a:?} vs {b:?}"));
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn random_segments_default_geometry(
        x1 in -960.0..960.0f64, y1 in -720.0..720.0f64, x2 in -960.0..960.0f64, y2 in -720.0..720.0f64
    ) {
        let seg = Segment::from_coords(x1, y1, x2, y2);
        prop_assert!(check_all(seg, &default_window()).is_ok(), "{}", check_all(seg, &default_window()).unwrap_err());
    }

    #[test]
    fn random_windows(
        (w, seg) in window().prop_flat_map(|w| (Just(w), snapped_segment(w)))
    ) {
        let r = check_cases(seg, &w, true);
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }

    #[test]
    fn point_segments_follow_containment(
        (w, x, y) in window().prop_flat_map(|w| (Just(w), snapped(w.xmin(), w.xmax()), snapped(w.ymin(), w.ymax())))
    ) {
        let seg = Segment::from_coords(x, y, x, y);
        for alg in AlgorithmId::ALL {
            let want = if w.contains(seg.p1) { ClipResult::Accepted(seg) } else { ClipResult::Rejected };
            prop_assert_eq!(clip(alg, seg, &w), want, "{}", alg);
        }
    }
}

#[test]
fn adversarial_suite_holds_every_invariant() {
    for w in [
        default_window(),
        ClipWindow::new(0.0, 0.0, 1.0, 1.0).unwrap(),
        ClipWindow::new(-3.5, 10.0, 40.25, 10.5).unwrap(),
    ] {
        for seg in adversarial_suite(&w) {
            if let Err(e) = check_all(seg, &w) {
                panic!("{e}");
            }
        }
    }
}

/// Up to 1e150 products of coordinate differences stay finite. Beyond that
/// even `x2 - x1` or `dy * dx` can overflow, whatever the algorithm.
#[test]
fn extreme_magnitudes_stay_finite() {
    let w = default_window();
    let big = 1e150;
    for seg in [
        Segment::from_coords(-big, -big, big, big),
        Segment::from_coords(-big, 0.0, big, 1.0),
        Segment::from_coords(0.0, -big, 1e-300, big),
        Segment::from_coords(-120.0, -big, -5e-324 - 100.0, big),
        Segment::from_coords(-100.0 - 1e-13, -80.0, -100.0 + 1e-13, 80.0),
        Segment::from_coords(5e-324, 0.0, 0.0, 5e-324),
        Segment::from_coords(-1e-300, -80.0, 1e-300, 80.0),
    ] {
        for alg in AlgorithmId::ALL {
            if let ClipResult::Accepted(s) = clip(alg, seg, &w) {
                assert!(s.is_finite(), "{alg} on {seg:?} gave {s:?}");
            }
        }
    }
}
