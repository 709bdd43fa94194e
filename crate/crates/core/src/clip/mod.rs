//! Seven segment-vs-rectangle clippers sharing one signature.
//!
//! Every clipper takes a finite [`Segment`] and a valid [`ClipWindow`] and
//! returns the part of the segment inside the (closed) window, keeping the
//! segment's direction, or [`ClipResult::Rejected`] when nothing is left.
//! A degenerate point segment is accepted unchanged iff the point is inside.

mod cohen_sutherland;
mod cyrus_beck;
mod kwc;
mod liang_barsky;
mod nln;
mod proposed;
mod skala;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::geom::{ClipResult, ClipWindow, Segment};

pub use cohen_sutherland::{clip_cohen_sutherland, compute_outcode, Outcode};
pub use cyrus_beck::clip_cyrus_beck;
pub use kwc::clip_kwc;
pub use liang_barsky::{clip_liang_barsky, ParamInterval};
pub use nln::clip_nicholl_lee_nicholl;
pub use proposed::clip_proposed;
pub use skala::{clip_skala, corner_mask, line_coefficients, HomogeneousLine, SkalaEdges, WindowEdge, EDGE_TABLE};

/// Signature shared by all clippers.
pub type ClipFn = fn(Segment, &ClipWindow) -> ClipResult;

/// The benchmarked algorithms, declared in
/// report column order (CS, LB, CB, NLN, Skala, KWC, Proposed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgorithmId {
    #[serde(rename = "CS")]
    CohenSutherland,
    #[serde(rename = "LB")]
    LiangBarsky,
    #[serde(rename = "CB")]
    CyrusBeck,
    #[serde(rename = "NLN")]
    NichollLeeNicholl,
    #[serde(rename = "Skala")]
    Skala,
    #[serde(rename = "KWC")]
    Kwc,
    #[serde(rename = "Proposed")]
    Proposed,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 7] = [
        AlgorithmId::CohenSutherland,
        AlgorithmId::LiangBarsky,
        AlgorithmId::CyrusBeck,
        AlgorithmId::NichollLeeNicholl,
        AlgorithmId::Skala,
        AlgorithmId::Kwc,
        AlgorithmId::Proposed,
    ];

    /// Short name used in reports and CSV.
    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::CohenSutherland => "CS",
            AlgorithmId::LiangBarsky => "LB",
            AlgorithmId::CyrusBeck => "CB",
            AlgorithmId::NichollLeeNicholl => "NLN",
            AlgorithmId::Skala => "Skala",
            AlgorithmId::Kwc => "KWC",
            AlgorithmId::Proposed => "Proposed",
        }
    }

    pub fn clip_fn(self) -> ClipFn {
        match self {
            AlgorithmId::CohenSutherland => clip_cohen_sutherland,
            AlgorithmId::LiangBarsky => clip_liang_barsky,
            AlgorithmId::CyrusBeck => clip_cyrus_beck,
            AlgorithmId::NichollLeeNicholl => clip_nicholl_lee_nicholl,
            AlgorithmId::Skala => clip_skala,
            AlgorithmId::Kwc => clip_kwc,
            AlgorithmId::Proposed => clip_proposed,
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm '{0}' (expected one of: proposed, cs, lb, cb, nln, skala, kwc)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for AlgorithmId {
    type Err = UnknownAlgorithm;

    /// Accepts the short report names and the long names, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "cs" | "cohensutherland" => AlgorithmId::CohenSutherland,
            "lb" | "liangbarsky" => AlgorithmId::LiangBarsky,
            "cb" | "cyrusbeck" => AlgorithmId::CyrusBeck,
            "nln" | "nichollleenicholl" => AlgorithmId::NichollLeeNicholl,
            "skala" => AlgorithmId::Skala,
            "kwc" | "kodituwakkuwijeweerachamikara" => AlgorithmId::Kwc,
            "proposed" | "prop" => AlgorithmId::Proposed,
            _ => return Err(UnknownAlgorithm(s.to_string())),
        };
        Ok(id)
    }
}

/// Single entry point keyed by algorithm.
#[inline]
pub fn clip(algorithm: AlgorithmId, seg: Segment, window: &ClipWindow) -> ClipResult {
    (algorithm.clip_fn())(seg, window)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;

    fn w() -> ClipWindow {
        ClipWindow::new(-100.0, -75.0, 100.0, 75.0).unwrap()
    }

    fn accepted(x1: f64, y1: f64, x2: f64, y2: f64) -> ClipResult {
        ClipResult::Accepted(Segment::from_coords(x1, y1, x2, y2))
    }

    fn assert_close(alg: AlgorithmId, got: ClipResult, want: ClipResult) {
        match (got, want) {
            (ClipResult::Rejected, ClipResult::Rejected) => {}
            (ClipResult::Accepted(g), ClipResult::Accepted(e)) => {
                for (a, b) in [(g.p1.x, e.p1.x), (g.p1.y, e.p1.y), (g.p2.x, e.p2.x), (g.p2.y, e.p2.y)] {
                    assert!((a - b).abs() <= 1e-9, "{alg}: got {g:?}, want {e:?}");
                }
            }
            _ => panic!("{alg}: got {got:?}, want {want:?}"),
        }
    }

    #[test]
    fn shared_examples_hold_for_every_algorithm() {
        let cases = [
            (Segment::from_coords(0.0, 0.0, 50.0, 50.0), accepted(0.0, 0.0, 50.0, 50.0)),
            (Segment::from_coords(-200.0, 10.0, -150.0, -20.0), ClipResult::Rejected),
            (Segment::from_coords(-200.0, -200.0, 200.0, 200.0), accepted(-75.0, -75.0, 75.0, 75.0)),
            (Segment::from_coords(-200.0, 0.0, 0.0, 200.0), ClipResult::Rejected),
            (Segment::from_coords(-200.0, 0.0, 200.0, 80.0), accepted(-100.0, 20.0, 100.0, 60.0)),
            // vertical, horizontal and reversed variants
            (Segment::from_coords(0.0, -1000.0, 0.0, 1000.0), accepted(0.0, -75.0, 0.0, 75.0)),
            (Segment::from_coords(1000.0, 10.0, -1000.0, 10.0), accepted(100.0, 10.0, -100.0, 10.0)),
            (Segment::from_coords(200.0, 200.0, -200.0, -200.0), accepted(75.0, 75.0, -75.0, -75.0)),
            (Segment::from_coords(-200.0, 200.0, 0.0, 0.0), accepted(-75.0, 75.0, 0.0, 0.0)),
            (Segment::from_coords(-150.0, 80.0, -150.0, 90.0), ClipResult::Rejected),
        ];
        for alg in AlgorithmId::ALL {
            for (seg, want) in cases {
                assert_close(alg, clip(alg, seg, &w()), want);
            }
        }
    }

    #[test]
    fn degenerate_points_follow_containment() {
        for alg in AlgorithmId::ALL {
            for (p, inside) in [
                (Point2::new(5.0, 5.0), true),
                (Point2::new(-100.0, 75.0), true),
                (Point2::new(100.0, 0.0), true),
                (Point2::new(150.0, 0.0), false),
                (Point2::new(0.0, -80.0), false),
                (Point2::new(-300.0, 300.0), false),
            ] {
                let got = clip(alg, Segment::new(p, p), &w());
                if inside {
                    assert_eq!(got, ClipResult::Accepted(Segment::new(p, p)), "{alg} at {p:?}");
                } else {
                    assert_eq!(got, ClipResult::Rejected, "{alg} at {p:?}");
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for alg in AlgorithmId::ALL {
            assert_eq!(alg.name().parse::<AlgorithmId>().unwrap(), alg);
            let json = serde_json::to_string(&alg).unwrap();
            assert_eq!(json, format!("\"{}\"", alg.name()));
        }
        assert_eq!("cohen-sutherland".parse::<AlgorithmId>().unwrap(), AlgorithmId::CohenSutherland);
        assert!("midpoint".parse::<AlgorithmId>().is_err());
    }
}
