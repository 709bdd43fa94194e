use std::process::{Command, Output};

use lineclip_core::{clip, AlgorithmId, ClipResult, ClipWindow, Segment};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lineclip")).args(args).output().expect("run lineclip")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const W: [&str; 5] = ["--window", "-100", "-75", "100", "75"];

fn clip_cmd(alg: &str, seg: [&str; 4]) -> Output {
    let mut args = vec!["clip", "--algorithm", alg, "--seg"];
    args.extend(seg);
    args.extend(W);
    run(&args)
}

#[test]
fn clip_examples() {
    let o = clip_cmd("proposed", ["0", "0", "50", "50"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ACCEPT 0 0 50 50\n");
    assert_eq!(stdout(&clip_cmd("skala", ["-200", "10", "-150", "-20"])), "REJECT\n");
    assert_eq!(stdout(&clip_cmd("proposed", ["-200", "-200", "200", "200"])), "ACCEPT -75 -75 75 75\n");
}

#[test]
fn every_algorithm_name_is_accepted() {
    for name in ["proposed", "cs", "lb", "cb", "nln", "skala", "kwc", "Cohen-Sutherland"] {
        let o = clip_cmd(name, ["-200", "0", "200", "80"]);
        assert_eq!(stdout(&o), "ACCEPT -100 20 100 60\n", "{name}");
    }
}

#[test]
fn printed_coordinates_round_trip() {
    let seg = Segment::from_coords(-123.456789, 0.1, 77.7, -300.3);
    let w = ClipWindow::new(-100.0, -75.0, 100.0, 75.0).unwrap();
    for alg in AlgorithmId::ALL {
        let o = clip_cmd(alg.name(), ["-123.456789", "0.1", "77.7", "-300.3"]);
        let text = stdout(&o);
        let ClipResult::Accepted(want) = clip(alg, seg, &w) else { panic!("{alg} rejected") };
        let got: Vec<f64> =
            text.trim().strip_prefix("ACCEPT ").unwrap().split(' ').map(|v| v.parse().unwrap()).collect();
        let want = [want.p1.x, want.p1.y, want.p2.x, want.p2.y];
        for (g, w) in got.iter().zip(want) {
            assert_eq!(g.to_bits(), w.to_bits(), "{alg}: {text}");
        }
    }
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        vec!["clip", "--algorithm", "proposed", "--seg", "0", "0", "1"],
        vec!["clip", "--algorithm", "midpoint", "--seg", "0", "0", "1", "1"],
        vec!["clip", "--algorithm", "cs", "--seg", "0", "0", "1", "1", "--window", "5", "5", "1", "1"],
        vec!["clip", "--algorithm", "cs", "--seg", "0", "0", "1", "x"],
        vec!["clip", "--algorithm", "cs", "--seg", "0", "0", "1", "1", "--bogus"],
        vec!["bench", "--lines", "0"],
        vec!["bench", "--reps", "-1"],
        vec!["bench", "--format", "xml"],
        vec!["bench", "--lines", "10", "--window", "-2000", "-1", "1", "1"],
        vec!["verify", "--tolerance", "-1"],
        vec!["verify", "--cases", "10", "--space", "0", "0", "1"],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_documents_window_order() {
    let o = run(&["bench", "--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("top-left corner is (XMIN, YMAX)"));
}

#[test]
fn bench_csv_shape() {
    let o = run(&["bench", "--lines", "1000", "--reps", "2", "--seed", "7", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "algorithm,run,seconds,accepted,checksum");
    assert_eq!(lines.len(), 1 + 14);
}

#[test]
fn bench_markdown_and_json() {
    let md = stdout(&run(&["bench", "--lines", "2000", "--reps", "3"]));
    for row in ["| Exec. |", "| 1 |", "| 3 |", "| **Avg:** |", "| Speedup vs Proposed (%) |", "| Accepted |"] {
        assert!(md.contains(row), "missing {row} in\n{md}");
    }
    let json =
        stdout(&run(&["bench", "--lines", "2000", "--reps", "1", "--format", "json", "--algorithms", "cs,proposed"]));
    assert!(json.contains("\"timings\"") && json.contains("\"CS\"") && !json.contains("\"Skala\""), "{json}");
}

#[test]
fn bench_writes_to_file() {
    let dir = std::env::temp_dir().join(format!("lineclip-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let o = run(&["bench", "--lines", "100", "--reps", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 8);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_summary() {
    let o = run(&["verify", "--cases", "1000", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let k: usize =
        text.lines().next().unwrap().split(" + ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| l.ends_with(" 0 MISMATCH")).collect();
    assert_eq!(rows.len(), 7, "{text}");
    for row in rows {
        let nums: Vec<usize> = row.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse().ok()).collect();
        assert_eq!(nums[0] + nums[1], 1000 + k, "{row}");
    }
}

#[test]
fn verify_with_only_the_adversarial_suite() {
    let o = run(&["verify", "--cases", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("cases: 0 random"));
}

#[test]
fn verify_reports_mismatches_with_exit_1() {
    // zero tolerance demands correctly rounded endpoints, which no clipper promises
    let args = ["verify", "--cases", "2000", "--seed", "5", "--tolerance", "0"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(1));
    let text = stdout(&a);
    let echoed: Vec<&str> = text.lines().filter(|l| l.starts_with("MISMATCH ")).collect();
    assert_eq!(echoed.len(), 10, "{text}");
    assert!(echoed[0].contains(" seg "));
    assert_eq!(text, stdout(&b), "failure report is not reproducible");
}

#[test]
fn verify_on_another_window() {
    let o = run(&[
        "verify", "--cases", "5000", "--seed", "9", "--window", "0", "0", "300", "10", "--space", "-50", "-500", "400",
        "500",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
