use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::io::Write;

use bocher_grace::cli::{InstanceDocument, ReportDocument};
use bocher_grace::ellipse::pair_distance;
use bocher_grace::numeric::c64;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bocher-grace"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn verify_file(name: &str) -> (i32, Option<ReportDocument>) {
    let out = run(&["verify", data(&format!("instances/{name}")).to_str().unwrap()]);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).ok())
}

#[test]
fn exit_codes_over_the_corpus() {
    let expected: BTreeMap<String, i32> =
        serde_json::from_str(&std::fs::read_to_string(data("expected-exit.json")).unwrap()).unwrap();
    let mut files: Vec<String> = std::fs::read_dir(data("instances"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(files, expected.keys().cloned().collect::<Vec<_>>());
    for (name, &code) in &expected {
        let (found, report) = verify_file(name);
        assert_eq!(found, code, "{name}");
        // a report is written exactly when the input was valid
        assert_eq!(report.is_some(), code != 3, "{name}");
        if let Some(r) = report {
            assert_eq!(r.verdict, code == 0);
        }
    }
}

#[test]
fn rectangle_report() {
    let (code, report) = verify_file("rectangle-roots.json");
    assert_eq!(code, 0);
    let report = report.unwrap();
    assert!(report.verdict);
    let r3 = 3f64.sqrt();
    let foci = report.report.ellipse_foci.unwrap();
    assert!(pair_distance(foci, (c64(r3, 0.0), c64(-r3, 0.0))) < 1e-10);
    assert!(report.duration_ms >= 0.0);
    assert_eq!(report.tool, "bocher-grace");
}

#[test]
fn coefficients_and_roots_agree() {
    let floor = 1e-14;
    let within = |a: f64, b: f64| a.max(floor) <= 10.0 * b.max(floor) && b.max(floor) <= 10.0 * a.max(floor);
    let pairs = [
        ("rectangle-coeffs.json", "rectangle-roots.json"),
        ("rectangle-descending.json", "rectangle-roots.json"),
    ];
    for (coeffs, roots) in pairs {
        let (a, b) = (verify_file(coeffs).1.unwrap().report, verify_file(roots).1.unwrap().report);
        assert_eq!(a.outcome, b.outcome);
        assert!(within(a.focus_error.unwrap(), b.focus_error.unwrap()));
        assert!(within(a.midpoint_residual.unwrap(), b.midpoint_residual.unwrap()));
        let worst = |r: &[f64]| r.iter().copied().fold(0.0, f64::max);
        assert!(within(worst(&a.tangency_residuals), worst(&b.tangency_residuals)));
    }

    // the coefficient form of a synthesized roots document
    let text = std::fs::read_to_string(data("instances/heptagon-synth.json")).unwrap();
    let doc = InstanceDocument::parse(&text).unwrap();
    let coeffs = InstanceDocument::coefficients(&doc.polynomial().unwrap()).to_json();
    let a: ReportDocument = serde_json::from_slice(&run_stdin(&["verify"], &coeffs).stdout).unwrap();
    let b: ReportDocument = serde_json::from_slice(&run_stdin(&["verify"], &text).stdout).unwrap();
    assert!(a.verdict && b.verdict);
    assert!(within(a.report.focus_error.unwrap(), b.report.focus_error.unwrap()));
}

#[test]
fn documents_round_trip() {
    for entry in std::fs::read_dir(data("instances")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        if let Ok(doc) = InstanceDocument::parse(&text) {
            let emitted = doc.to_json();
            let again = InstanceDocument::parse(&emitted).unwrap();
            assert_eq!(again, doc);
            assert_eq!(again.to_json(), emitted);
        }
    }
    let out = run(&["verify", data("instances/triangle.json").to_str().unwrap()]);
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<ReportDocument>(&text).unwrap(), report);
}

#[test]
fn degenerate_inputs_mention_zero_beta() {
    for name in ["equilateral.json", "square.json", "hexagon-affine.json"] {
        let out = run(&["verify", data(&format!("instances/{name}")).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2));
        assert!(stderr(&out).contains("β=0"), "{name}");
    }
}

#[test]
fn malformed_input_reports_a_line() {
    let out = run(&["verify", data("instances/malformed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
    let out = run(&["verify", data("instances/count-mismatch.json").to_str().unwrap()]);
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
    let out = run(&["verify", "/nonexistent/instance.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tight_tolerances_fail_the_verdict() {
    let path = data("instances/dodecagon-synth.json");
    let out = run(&[
        "verify",
        path.to_str().unwrap(),
        "--tol-focus",
        "0",
        "--tol-midpoint",
        "0",
        "--tol-tangency",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!report.verdict);
    assert_eq!(report.tolerances.focus, 0.0);
}

#[test]
fn synthesize_contract() {
    let a = run(&["synthesize", "--n", "5"]);
    assert_eq!(a.status.code(), Some(0));
    let doc = InstanceDocument::parse(&stdout(&a)).unwrap();
    assert_eq!(doc.data.len(), 5);
    assert_eq!(run_stdin(&["verify"], &stdout(&a)).status.code(), Some(0));

    let s1 = run(&["synthesize", "--n", "9", "--seed", "2024"]);
    let s2 = run(&["synthesize", "--n", "9", "--seed", "2024"]);
    assert_eq!(s1.stdout, s2.stdout);
    assert_eq!(run_stdin(&["verify"], &stdout(&s1)).status.code(), Some(0));

    let out = run(&["synthesize", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("need a polygon"));

    // level -n * offset / scale = -0.75
    let out = run(&["synthesize", "--n", "4", "--scale", "4", "--offset", "0.75"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("degenerate level set"));

    let out = run(&["synthesize", "--n", "4", "--format", "text", "--translation", "1,1", "--multiplier", "0,2"]);
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn cheb_lemma_command() {
    for args in [["5", "1", "100"], ["1", "0.3", "50"], ["12", "0.1", "1000"]] {
        let out = run(&["cheb-lemma", "--n", args[0], "--s", args[1], "--grid", args[2]]);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(v["relative_residual"].as_f64().unwrap() < 1e-9);
    }
    assert_eq!(run(&["cheb-lemma", "--n", "3", "--s", "0"]).status.code(), Some(3));
    assert_eq!(run(&["cheb-lemma", "--n", "3", "--s", "1", "--format", "text"]).status.code(), Some(0));
}

#[test]
fn detect_and_inellipse_commands() {
    let rect = data("instances/rectangle-polygon.json");
    let out = run(&["detect", rect.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("accepted: true"));
    let out = run(&["inellipse", rect.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["accepted"], true);
    assert!((v["ellipse"]["semi_minor"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let out = run(&["detect", data("instances/trapezoid.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

fn count(svg: &str, class: &str) -> usize {
    svg.matches(&format!("class=\"{class}\"")).count()
}

/// Centre of each focus cross, from its first and third coordinates.
fn focus_centres(svg: &str) -> Vec<(f64, f64)> {
    svg.lines()
        .filter(|l| l.contains("class=\"focus\""))
        .map(|l| {
            let d = l.split("d=\"").nth(1).unwrap();
            let nums: Vec<f64> = d.split_whitespace().filter_map(|t| t.parse().ok()).collect();
            ((nums[0] + nums[2]) / 2.0, (nums[1] + nums[3]) / 2.0)
        })
        .collect()
}

fn circle_centres(svg: &str, class: &str) -> Vec<(f64, f64)> {
    let attr = |l: &str, name: &str| -> f64 {
        l.split(&format!(" {name}=\"")).nth(1).unwrap().split('"').next().unwrap().parse().unwrap()
    };
    svg.lines()
        .filter(|l| l.contains(&format!("class=\"{class}\"")))
        .map(|l| (attr(l, "cx"), attr(l, "cy")))
        .collect()
}

#[test]
fn rectangle_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("rect.svg");
    let input = data("instances/rectangle-roots.json");
    let out = run(&["plot", input.to_str().unwrap(), "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(svg.matches("<svg").count(), 1);
    for id in ["polygon", "midpoints", "ellipse", "critical-points", "foci"] {
        assert_eq!(svg.matches(&format!("<g id=\"{id}\"")).count(), 1, "{id}");
    }
    assert_eq!(count(&svg, "vertex"), 4);
    assert_eq!(count(&svg, "midpoint"), 4);
    assert_eq!(count(&svg, "ellipse"), 1);
    assert_eq!(count(&svg, "critical-point"), 3);
    assert_eq!(count(&svg, "focus"), 2);
    let critical = circle_centres(&svg, "critical-point");
    for (x, y) in focus_centres(&svg) {
        assert!(critical.iter().any(|&(cx, cy)| (cx - x).abs() < 1e-6 && (cy - y).abs() < 1e-6));
    }

    // same input, same bytes
    let again = run(&["plot", input.to_str().unwrap()]);
    assert_eq!(again.stdout, svg.as_bytes());

    let poly = stdout(&run(&["plot", input.to_str().unwrap(), "--polyline"]));
    assert_eq!(count(&poly, "ellipse"), 1);
    let line = poly.lines().find(|l| l.contains("<polyline")).unwrap();
    assert_eq!(line.matches(',').count(), 65);
}

#[test]
fn family_plot() {
    let svg = stdout(&run(&["plot", "--family", "0.25,0.5,1,1.5"]));
    assert_eq!(count(&svg, "ellipse"), 4);
    let foci = focus_centres(&svg);
    assert_eq!(foci.len(), 2);
    assert!(foci.iter().all(|&(x, y)| (x.abs() - 1.0).abs() < 1e-9 && y.abs() < 1e-9));
    assert_eq!(run(&["plot", "--family", "0.5,-1"]).status.code(), Some(3));
}

#[test]
fn unwritable_plot_path() {
    let input = data("instances/rectangle-roots.json");
    let out = run(&["plot", input.to_str().unwrap(), "-o", "/nonexistent/dir/out.svg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--tol-focus", "abc"]).status.code(), Some(3));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
