//! splitmix64 and the segment generator built on it.

use crate::geom::{ClipWindow, Point2, Segment};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// One splitmix64 step: returns the output and the advanced state.
#[inline]
pub fn next_u64(state: u64) -> (u64, u64) {
    let state = state.wrapping_add(GOLDEN_GAMMA);
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (z ^ (z >> 31), state)
}

/// Generator state threaded by value through [`SplitMix64::next_u64`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let (v, s) = next_u64(self.state);
        self.state = s;
        v
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        unit(self.next_u64())
    }
}

#[inline]
fn unit(u: u64) -> f64 {
    (u >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// `min + unit(u) * (max - min)`, kept strictly below `max`.
#[inline]
pub fn map_to_range(u: u64, min: f64, max: f64) -> f64 {
    let v = min + unit(u) * (max - min);
    if v < max {
        v
    } else {
        // rounding reached the upper bound
        prev_down(max)
    }
}

fn prev_down(v: f64) -> f64 {
    if v == 0.0 {
        -f64::from_bits(1)
    } else if v > 0.0 {
        f64::from_bits(v.to_bits() - 1)
    } else {
        f64::from_bits(v.to_bits() + 1)
    }
}

/// Draws `x1, y1, x2, y2` in that order, each uniform over the space.
#[inline]
pub fn gen_segment(rng: &mut SplitMix64, space: &ClipWindow) -> Segment {
    let x1 = map_to_range(rng.next_u64(), space.xmin(), space.xmax());
    let y1 = map_to_range(rng.next_u64(), space.ymin(), space.ymax());
    let x2 = map_to_range(rng.next_u64(), space.xmin(), space.xmax());
    let y2 = map_to_range(rng.next_u64(), space.ymin(), space.ymax());
    Segment::new(Point2::new(x1, y1), Point2::new(x2, y2))
}

/// Replaces the contents of `buf` with the next `count` segments.
pub fn fill_segments(rng: &mut SplitMix64, space: &ClipWindow, buf: &mut Vec<Segment>, count: usize) {
    buf.clear();
    buf.extend((0..count).map(|_| gen_segment(rng, space)));
}
