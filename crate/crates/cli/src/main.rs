use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lineclip_core::bench::{render_report, run_bench, BenchConfig, ReportFormat};
use lineclip_core::verify::{run_verify, VerifyConfig};
use lineclip_core::{clip, AlgorithmId, ClipResult, ClipWindow, Segment};

const WINDOW_ORDER: &str = "given as XMIN YMIN XMAX YMAX; the top-left corner is (XMIN, YMAX) \
                            and the bottom-right corner is (XMAX, YMIN)";

#[derive(Parser)]
#[command(name = "lineclip", version, about = "Clip, benchmark and verify 2D line clipping algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clip one segment and print `ACCEPT x1 y1 x2 y2` or `REJECT`.
    Clip(ClipArgs),
    /// Time every algorithm on a seeded random workload.
    Bench(BenchArgs),
    /// Check every algorithm against the exact rational clipper.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ClipArgs {
    /// proposed, cs, lb, cb, nln, skala or kwc
    #[arg(long)]
    algorithm: AlgorithmId,
    /// Segment endpoints X1 Y1 X2 Y2.
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["X1", "Y1", "X2", "Y2"], required = true)]
    seg: Vec<f64>,
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["XMIN", "YMIN", "XMAX", "YMAX"],
          default_values_t = [-100.0, -75.0, 100.0, 75.0], help = format!("Clip window, {WINDOW_ORDER}"))]
    window: Vec<f64>,
}

#[derive(Args)]
struct Geometry {
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["XMIN", "YMIN", "XMAX", "YMAX"],
          default_values_t = [-960.0, -720.0, 960.0, 720.0], help = format!("Segment generation space, {WINDOW_ORDER}"))]
    space: Vec<f64>,
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["XMIN", "YMIN", "XMAX", "YMAX"],
          default_values_t = [-100.0, -75.0, 100.0, 75.0], help = format!("Clip window, {WINDOW_ORDER}"))]
    window: Vec<f64>,
}

#[derive(Args)]
struct BenchArgs {
    /// Segments clipped per run.
    #[arg(long, default_value_t = 1_000_000)]
    lines: usize,
    /// Recorded runs per algorithm.
    #[arg(long, default_value_t = 10)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// csv, md or json
    #[arg(long, default_value = "md")]
    format: ReportFormat,
    #[command(flatten)]
    geometry: Geometry,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',')]
    algorithms: Option<Vec<AlgorithmId>>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random segments on top of the adversarial suite.
    #[arg(long, default_value_t = 100_000)]
    cases: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    geometry: Geometry,
    /// Largest accepted endpoint error per coordinate.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
}

fn window(v: &[f64], what: &str) -> Result<ClipWindow, String> {
    ClipWindow::new(v[0], v[1], v[2], v[3]).map_err(|e| format!("--{what}: {e}"))
}

fn cmd_clip(args: ClipArgs) -> Result<ExitCode, String> {
    let w = window(&args.window, "window")?;
    let s = &args.seg;
    let seg = Segment::try_from_coords(s[0], s[1], s[2], s[3]).map_err(|e| format!("invalid segment: {e}"))?;
    match clip(args.algorithm, seg, &w) {
        ClipResult::Accepted(r) => println!("ACCEPT {} {} {} {}", r.p1.x, r.p1.y, r.p2.x, r.p2.y),
        ClipResult::Rejected => println!("REJECT"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, String> {
    let config = BenchConfig {
        space: window(&args.geometry.space, "space")?,
        window: window(&args.geometry.window, "window")?,
        lines_per_run: args.lines,
        repetitions: args.reps,
        seed: args.seed,
        algorithms: args.algorithms.unwrap_or_else(|| AlgorithmId::ALL.to_vec()),
    };
    let report = run_bench(&config).map_err(|e| e.to_string())?;
    let text = render_report(&report, args.format);
    match args.out {
        Some(path) => fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if !(args.tolerance >= 0.0 && args.tolerance.is_finite()) {
        return Err(format!("invalid tolerance {}", args.tolerance));
    }
    let config = VerifyConfig {
        cases: args.cases,
        seed: args.seed,
        space: window(&args.geometry.space, "space")?,
        window: window(&args.geometry.window, "window")?,
        tolerance: args.tolerance,
        adversarial: true,
    };
    let report = run_verify(&config);
    print!("{report}");
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Clip(a) => cmd_clip(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Verify(a) => cmd_verify(a),
    };
    outcome.unwrap_or_else(|msg| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}
