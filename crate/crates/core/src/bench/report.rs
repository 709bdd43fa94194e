use std::fmt::Write as _;
use std::str::FromStr;

use crate::clip::AlgorithmId;

use super::BenchReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format '{other}' (expected csv, md or json)")),
        }
    }
}

pub const CSV_HEADER: &str = "algorithm,run,seconds,accepted,checksum";

pub fn render_report(report: &BenchReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Markdown => render_markdown(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

fn render_csv(report: &BenchReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for t in &report.timings {
        // `{}` on f64 prints the shortest string that parses back exactly
        writeln!(out, "{},{},{},{},{:016x}", t.algorithm, t.run_index, t.seconds, t.accepted_count, t.checksum)
            .unwrap();
    }
    out
}

/// Decimal places that keep at least four significant digits of the
/// smallest average, and never fewer than three.
fn seconds_decimals(report: &BenchReport) -> usize {
    let smallest = report.averages.values().copied().fold(f64::INFINITY, f64::min);
    if !(smallest.is_finite() && smallest > 0.0) {
        return 3;
    }
    let magnitude = smallest.log10().floor() as i64;
    (3 - magnitude).clamp(3, 12) as usize
}

fn render_markdown(report: &BenchReport) -> String {
    let c = &report.config;
    let mut cols: Vec<AlgorithmId> = c.algorithms.clone();
    cols.sort();
    let dec = seconds_decimals(report);

    let mut out = String::new();
    writeln!(
        out,
        "Clipping time in seconds for {} lines per run, {} runs, seed {}.",
        c.lines_per_run, c.repetitions, c.seed
    )
    .unwrap();
    writeln!(
        out,
        "Window ({}, {}, {}, {}), space ({}, {}, {}, {}).",
        c.window.xmin(),
        c.window.ymin(),
        c.window.xmax(),
        c.window.ymax(),
        c.space.xmin(),
        c.space.ymin(),
        c.space.xmax(),
        c.space.ymax()
    )
    .unwrap();
    writeln!(
        out,
        "Times cover clipping only (no drawing, no generation). Every run replays the same \
         seeded segment stream after one discarded warm-up pass."
    )
    .unwrap();
    out.push('\n');

    let row = |label: &str, cells: Vec<String>| format!("| {} | {} |\n", label, cells.join(" | "));
    out += &row("Exec.", cols.iter().map(|a| a.name().to_string()).collect());
    out += &row("---", cols.iter().map(|_| "---".to_string()).collect());

    for run in 1..=c.repetitions {
        let cells = cols
            .iter()
            .map(|&a| {
                report
                    .runs_of(a)
                    .find(|t| t.run_index == run)
                    .map_or_else(|| "-".to_string(), |t| format!("{:.dec$}", t.seconds))
            })
            .collect();
        out += &row(&run.to_string(), cells);
    }

    let avg = cols
        .iter()
        .map(|a| report.averages.get(a).map_or_else(|| "-".to_string(), |v| format!("**{v:.dec$}**")))
        .collect();
    out += &row("**Avg:**", avg);

    if !report.speedups_vs_proposed.is_empty() {
        let sp = cols
            .iter()
            .map(|a| report.speedups_vs_proposed.get(a).map_or_else(|| "-".to_string(), |v| format!("{v:.2}")))
            .collect();
        out += &row("Speedup vs Proposed (%)", sp);
    }

    let per_alg = |f: &dyn Fn(&super::RunTiming) -> String| -> Vec<String> {
        cols.iter()
            .map(|&a| {
                let mut vals: Vec<String> = report.runs_of(a).map(f).collect();
                vals.dedup();
                match vals.len() {
                    0 => "-".to_string(),
                    1 => vals.remove(0),
                    _ => "varies".to_string(),
                }
            })
            .collect()
    };
    out += &row("Accepted", per_alg(&|t| t.accepted_count.to_string()));
    out += &row("Checksum", per_alg(&|t| format!("{:016x}", t.checksum)));
    out
}
