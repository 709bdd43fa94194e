//! Timed clipping runs over a seeded random workload.
//!
//! Segments are drawn uniformly over a generation space, materialized before
//! the clock starts, and fed identically to every algorithm. Each algorithm
//! gets one discarded warm-up pass followed by the recorded repetitions.
//! Results are folded into a checksum so the work cannot be optimized away.

mod report;
mod rng;
mod stats;

use std::collections::BTreeMap;
use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clip::{self, AlgorithmId};
use crate::geom::{ClipResult, ClipWindow, Segment};

pub use report::{render_report, ReportFormat};
pub use rng::{fill_segments, gen_segment, map_to_range, next_u64, SplitMix64};
pub use stats::{mean_seconds, speedup_percent};

/// Segments held in memory at once. Larger runs are regenerated chunk by
/// chunk, with only the clipping of each chunk on the clock.
pub const CHUNK_SEGMENTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("clip window must lie inside the generation space")]
    WindowOutsideSpace,
    #[error("lines per run must be at least 1")]
    NoLines,
    #[error("repetitions must be at least 1")]
    NoRepetitions,
    #[error("at least one algorithm is required")]
    NoAlgorithms,
    #[error("algorithm {0} listed more than once")]
    DuplicateAlgorithm(AlgorithmId),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub space: ClipWindow,
    pub window: ClipWindow,
    pub lines_per_run: usize,
    pub repetitions: usize,
    pub seed: u64,
    pub algorithms: Vec<AlgorithmId>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            space: ClipWindow::new(-960.0, -720.0, 960.0, 720.0).expect("valid space"),
            window: ClipWindow::new(-100.0, -75.0, 100.0, 75.0).expect("valid window"),
            lines_per_run: 1_000_000,
            repetitions: 10,
            seed: 1,
            algorithms: AlgorithmId::ALL.to_vec(),
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if !self.space.encloses(&self.window) {
            return Err(BenchError::WindowOutsideSpace);
        }
        if self.lines_per_run == 0 {
            return Err(BenchError::NoLines);
        }
        if self.repetitions == 0 {
            return Err(BenchError::NoRepetitions);
        }
        if self.algorithms.is_empty() {
            return Err(BenchError::NoAlgorithms);
        }
        for (i, a) in self.algorithms.iter().enumerate() {
            if self.algorithms[..i].contains(a) {
                return Err(BenchError::DuplicateAlgorithm(*a));
            }
        }
        Ok(())
    }
}

/// One row of the results: one algorithm, one repetition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTiming {
    pub algorithm: AlgorithmId,
    /// 1-based, like the "Exec." column of the markdown report.
    pub run_index: usize,
    pub seconds: f64,
    pub accepted_count: u64,
    pub checksum: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub timings: Vec<RunTiming>,
    pub averages: BTreeMap<AlgorithmId, f64>,
    /// Relative to [`AlgorithmId::Proposed`]; empty when it was not run.
    pub speedups_vs_proposed: BTreeMap<AlgorithmId, f64>,
}

impl BenchReport {
    /// Builds the derived columns from raw timings. Also used to feed in
    /// externally measured values.
    pub fn from_timings(config: BenchConfig, timings: Vec<RunTiming>) -> Self {
        let averages: BTreeMap<_, _> = config
            .algorithms
            .iter()
            .filter_map(|&alg| {
                let secs: Vec<f64> = timings.iter().filter(|t| t.algorithm == alg).map(|t| t.seconds).collect();
                (!secs.is_empty()).then(|| (alg, mean_seconds(&secs)))
            })
            .collect();
        let speedups_vs_proposed = match averages.get(&AlgorithmId::Proposed) {
            Some(&reference) => averages.iter().map(|(&a, &avg)| (a, speedup_percent(reference, avg))).collect(),
            None => BTreeMap::new(),
        };
        BenchReport { config, timings, averages, speedups_vs_proposed }
    }

    pub fn runs_of(&self, alg: AlgorithmId) -> impl Iterator<Item = &RunTiming> {
        self.timings.iter().filter(move |t| t.algorithm == alg)
    }
}

/// FNV-1a style fold over accept flags and endpoint bit patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checksum {
    hash: u64,
    accepted: u64,
}

impl Default for Checksum {
    fn default() -> Self {
        Checksum { hash: 0xcbf2_9ce4_8422_2325, accepted: 0 }
    }
}

impl Checksum {
    const PRIME: u64 = 0x0000_0100_0000_01b3;

    #[inline]
    fn mix(&mut self, v: u64) {
        self.hash = (self.hash ^ v).wrapping_mul(Self::PRIME);
    }

    #[inline]
    pub fn absorb(&mut self, r: &ClipResult) {
        match r {
            ClipResult::Accepted(s) => {
                self.accepted += 1;
                self.mix(1);
                for v in [s.p1.x, s.p1.y, s.p2.x, s.p2.y] {
                    self.mix(v.to_bits());
                }
            }
            ClipResult::Rejected => self.mix(0),
        }
    }

    pub fn value(&self) -> u64 {
        self.hash
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }
}

#[inline(never)]
fn time_chunk<F>(clip: F, segments: &[Segment], window: &ClipWindow, sink: &mut Checksum) -> Duration
where
    F: Fn(Segment, &ClipWindow) -> ClipResult,
{
    let start = Instant::now();
    for &seg in segments {
        let r = clip(black_box(seg), window);
        sink.absorb(&r);
    }
    let elapsed = start.elapsed();
    black_box(&*sink);
    elapsed
}

/// Dispatches on the algorithm outside the loop so each clipper is
/// monomorphized into its own timing loop.
fn time_algorithm(alg: AlgorithmId, segments: &[Segment], window: &ClipWindow, sink: &mut Checksum) -> Duration {
    match alg {
        AlgorithmId::CohenSutherland => time_chunk(clip::clip_cohen_sutherland, segments, window, sink),
        AlgorithmId::LiangBarsky => time_chunk(clip::clip_liang_barsky, segments, window, sink),
        AlgorithmId::CyrusBeck => time_chunk(clip::clip_cyrus_beck, segments, window, sink),
        AlgorithmId::NichollLeeNicholl => time_chunk(clip::clip_nicholl_lee_nicholl, segments, window, sink),
        AlgorithmId::Skala => time_chunk(clip::clip_skala, segments, window, sink),
        AlgorithmId::Kwc => time_chunk(clip::clip_kwc, segments, window, sink),
        AlgorithmId::Proposed => time_chunk(clip::clip_proposed, segments, window, sink),
    }
}

/// The seeded workload, either fully materialized or regenerated per chunk.
struct Workload<'a> {
    config: &'a BenchConfig,
    resident: Option<Vec<Segment>>,
    scratch: Vec<Segment>,
}

impl<'a> Workload<'a> {
    fn new(config: &'a BenchConfig) -> Self {
        let resident = (config.lines_per_run <= CHUNK_SEGMENTS).then(|| {
            let mut buf = Vec::with_capacity(config.lines_per_run);
            fill_segments(&mut SplitMix64::new(config.seed), &config.space, &mut buf, config.lines_per_run);
            buf
        });
        Workload { config, resident, scratch: Vec::new() }
    }

    /// Runs `alg` over the whole stream once.
    fn run(&mut self, alg: AlgorithmId) -> (Duration, Checksum) {
        let mut sink = Checksum::default();
        let window = self.config.window;
        if let Some(buf) = &self.resident {
            return (time_algorithm(alg, buf, &window, &mut sink), sink);
        }
        let mut rng = SplitMix64::new(self.config.seed);
        let mut remaining = self.config.lines_per_run;
        let mut total = Duration::ZERO;
        while remaining > 0 {
            let n = remaining.min(CHUNK_SEGMENTS);
            fill_segments(&mut rng, &self.config.space, &mut self.scratch, n);
            total += time_algorithm(alg, &self.scratch, &window, &mut sink);
            remaining -= n;
        }
        (total, sink)
    }
}

/// Runs the full protocol. The timing loop is single-threaded.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, BenchError> {
    config.validate()?;
    let mut workload = Workload::new(config);
    let mut timings = Vec::with_capacity(config.algorithms.len() * config.repetitions);

    for &alg in &config.algorithms {
        let _warmup = workload.run(alg);
        for run in 1..=config.repetitions {
            let (elapsed, sink) = workload.run(alg);
            timings.push(RunTiming {
                algorithm: alg,
                run_index: run,
                // never report a zero duration from a coarse clock
                seconds: elapsed.as_secs_f64().max(1e-9),
                accepted_count: sink.accepted(),
                checksum: sink.value(),
            });
        }
    }
    Ok(BenchReport::from_timings(config.clone(), timings))
}
