//! The `bocher-grace` command-line tool.
//!
//! Exit codes: 0 pass, 1 verdict fail, 2 hypothesis not satisfied, 3 input
//! or usage error.

pub mod document;
pub mod svg;

use std::ffi::OsString;
use std::f64::consts::PI;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::affine::ConformalSimilarity;
use crate::chebyshev::{cheb_t, EllipseTraceParams};
use crate::ellipse::confocal_member;
use crate::error::Error;
use crate::numeric::{c64, RootConfig};
use crate::regularity::{
    chebyshev_level, detect_affinely_regular, inscribed_midpoint_ellipse, synthesize_roots, verify_bocher_grace,
    Outcome, Tolerances, VerificationReport,
};
pub use document::{DocumentError, InstanceDocument, InstanceKind, ReportDocument};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Largest relative periodicity residual `cheb-lemma` accepts.
pub const LEMMA_TOLERANCE: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(name = "bocher-grace", version, about = "Critical points, affinely regular polygons and their inellipses")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the theorem on one instance document.
    Verify {
        /// Instance document; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Emit a roots document whose critical points have the Chebyshev form.
    Synthesize {
        #[arg(long)]
        n: usize,
        /// Leading factor of `(scale/n) T_n + offset`, as `re,im`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        scale: Option<Complex64>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        offset: Option<Complex64>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        translation: Option<Complex64>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        multiplier: Option<Complex64>,
        /// Draw the level and the similarity at random from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Fit a polygon to `α ω^k + β ω^{-k} + γ`.
    Detect {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-6)]
        tol_regular: f64,
    },
    /// Midpoint inellipse of an affinely regular polygon.
    Inellipse {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-6)]
        tol_regular: f64,
    },
    /// Periodicity of `T_n` along a member of the confocal family.
    ChebLemma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
    /// Draw an instance, or with `--family` the confocal ellipses with foci ±1.
    Plot {
        input: Option<PathBuf>,
        /// SVG path; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Draw ellipses as 64-segment polylines.
        #[arg(long)]
        polyline: bool,
        /// Comma-separated confocal parameters s > 0.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        family: Option<Vec<f64>>,
        #[command(flatten)]
        tol: TolArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct TolArgs {
    #[arg(long, default_value_t = 1e-6)]
    pub tol_regular: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol_critical: f64,
    #[arg(long, default_value_t = 1e-7)]
    pub tol_focus: f64,
    #[arg(long, default_value_t = 1e-7)]
    pub tol_tangency: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_midpoint: f64,
}

impl TolArgs {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            regular: self.tol_regular,
            critical: self.tol_critical,
            focus: self.tol_focus,
            tangency: self.tol_tangency,
            midpoint: self.tol_midpoint,
            roots: RootConfig::default(),
        }
    }
}

/// `re,im` or a bare real.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    let z = match parts.as_slice() {
        [re] => c64(num(re)?, 0.0),
        [re, im] => c64(num(re)?, num(im)?),
        _ => return Err(format!("expected `re,im`, got {s:?}")),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// A failure that ends the command with a message and an exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_INPUT, e.to_string())
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit(EXIT_INPUT, e.to_string())
    }
}

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(Exit(code, message)) => {
            let _ = writeln!(io.stderr, "error: {message}");
            code
        }
    }
}

fn read_document(input: &Option<PathBuf>, io: &mut Io) -> Result<InstanceDocument, Exit> {
    let (name, text) = match input {
        Some(path) if path.as_os_str() != "-" => {
            let text = std::fs::read_to_string(path).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            (path.display().to_string(), text)
        }
        _ => {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            ("<stdin>".to_string(), text)
        }
    };
    InstanceDocument::parse(&text).map_err(|e| Exit(EXIT_INPUT, format!("{name}: {e}")))
}

fn emit_json(io: &mut Io, value: &impl serde::Serialize) -> Result<(), Exit> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Exit(EXIT_INPUT, e.to_string()))?;
    writeln!(io.stdout, "{text}")?;
    Ok(())
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.12} {} {:.12}i", z.re, if z.im < 0.0 { '-' } else { '+' }, z.im.abs())
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or("n/a".into(), |v| format!("{v:.3e}"))
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Exit> {
    match &cli.command {
        Command::Verify { input, tol } => cmd_verify(&read_document(input, io)?, tol.tolerances(), cli.format, io),
        Command::Synthesize {
            n,
            scale,
            offset,
            translation,
            multiplier,
            seed,
        } => {
            let doc = cmd_synthesize(*n, *scale, *offset, *translation, *multiplier, *seed)?;
            match cli.format {
                Format::Json => writeln!(io.stdout, "{}", doc.to_json())?,
                Format::Text => {
                    for z in &doc.data {
                        writeln!(io.stdout, "{}", fmt_c(*z))?;
                    }
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Detect { input, tol_regular } => {
            let doc = read_document(input, io)?;
            cmd_detect(&doc, *tol_regular, false, cli.format, io)
        }
        Command::Inellipse { input, tol_regular } => {
            let doc = read_document(input, io)?;
            cmd_detect(&doc, *tol_regular, true, cli.format, io)
        }
        Command::ChebLemma { n, s, grid } => cmd_cheb_lemma(*n, *s, *grid, cli.format, io),
        Command::Plot {
            input,
            output,
            polyline,
            family,
            tol,
        } => {
            let figure = match family {
                Some(values) => family_figure(values)?,
                None => instance_figure(&read_document(input, io)?, &tol.tolerances())?,
            };
            let svg = figure.render(*polyline);
            match output {
                Some(path) => std::fs::write(path, svg)
                    .map_err(|e| Exit(EXIT_INPUT, format!("cannot write {}: {e}", path.display())))?,
                None => io.stdout.write_all(svg.as_bytes())?,
            }
            Ok(EXIT_PASS)
        }
    }
}

pub fn exit_code(report: &VerificationReport) -> i32 {
    match report.outcome {
        Outcome::Verified => EXIT_PASS,
        Outcome::Failed => EXIT_FAIL,
        Outcome::HypothesisNotSatisfied => EXIT_HYPOTHESIS,
    }
}

fn cmd_verify(doc: &InstanceDocument, tol: Tolerances, format: Format, io: &mut Io) -> Result<i32, Exit> {
    let start = Instant::now();
    let p = doc.polynomial()?;
    let report = verify_bocher_grace(&p, &tol)?;
    let code = exit_code(&report);
    let document = ReportDocument::new(report, tol, start.elapsed().as_secs_f64() * 1e3);
    match format {
        Format::Json => emit_json(io, &document)?,
        Format::Text => write_report_text(&document.report, io)?,
    }
    for d in &document.report.diagnostics {
        writeln!(io.stderr, "{d}")?;
    }
    Ok(code)
}

fn write_report_text(r: &VerificationReport, io: &mut Io) -> std::io::Result<()> {
    let out = &mut *io.stdout;
    let outcome = match r.outcome {
        Outcome::Verified => "verified",
        Outcome::Failed => "failed",
        Outcome::HypothesisNotSatisfied => "hypothesis not satisfied",
    };
    writeln!(out, "outcome: {outcome}")?;
    writeln!(out, "degree: {}", r.degree)?;
    writeln!(out, "scale: {:.6}", r.scale)?;
    let form = &r.critical_form.form;
    writeln!(out, "critical form: alpha = {}, beta = {}", fmt_c(form.alpha), fmt_c(form.beta))?;
    writeln!(out, "critical form relative residual: {:.3e}", form.relative_residual())?;
    if let Some(reg) = &r.regularity {
        writeln!(out, "regularity relative residual: {:.3e}", reg.fit.relative_residual())?;
    }
    if let Some(e) = &r.ellipse {
        writeln!(
            out,
            "ellipse: center {}, semi-axes {:.12} {:.12}, rotation {:.12}",
            fmt_c(e.center),
            e.semi_major,
            e.semi_minor,
            e.rotation
        )?;
    }
    if let Some((f1, f2)) = r.ellipse_foci {
        writeln!(out, "foci: {}; {}", fmt_c(f1), fmt_c(f2))?;
    }
    let (e1, e2) = r.extreme_critical_points;
    writeln!(out, "extreme critical points: {}; {}", fmt_c(e1), fmt_c(e2))?;
    writeln!(out, "focus error: {}", fmt_opt(r.focus_error))?;
    writeln!(out, "midpoint residual: {}", fmt_opt(r.midpoint_residual))?;
    writeln!(
        out,
        "tangency residual: {}",
        fmt_opt(r.tangency_residuals.iter().copied().reduce(f64::max))
    )?;
    for d in &r.diagnostics {
        writeln!(out, "note: {d}")?;
    }
    Ok(())
}

/// Roots document for `(scale/n) T_n + offset` mapped through a similarity.
/// Defaults: scale n, offset 3, identity. With a seed, the level
/// `cos(n(θ + i s))`, s in [0.2, 1], and the similarity (multiplier modulus
/// in [0.5, 2], translation no longer than that) are drawn at random unless
/// given explicitly.
pub fn cmd_synthesize(
    n: usize,
    scale: Option<Complex64>,
    offset: Option<Complex64>,
    translation: Option<Complex64>,
    multiplier: Option<Complex64>,
    seed: Option<u64>,
) -> Result<InstanceDocument, Error> {
    if n < 3 {
        return Err(Error::NeedPolygon { n });
    }
    let scale = scale.unwrap_or(c64(n as f64, 0.0));
    let (offset, translation, multiplier) = match seed {
        None => (
            offset.unwrap_or(c64(3.0, 0.0)),
            translation.unwrap_or(c64(0.0, 0.0)),
            multiplier.unwrap_or(c64(1.0, 0.0)),
        ),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s: f64 = rng.gen_range(0.2..=1.0);
            let theta: f64 = rng.gen_range(0.0..2.0 * PI);
            let level = (c64(theta, s) * n as f64).cos();
            // translation within the multiplier's modulus: far-off root sets
            // lose their shape in monomial coefficients
            let modulus = rng.gen_range(0.5..2.0);
            let m = Complex64::from_polar(modulus, rng.gen_range(-PI..PI));
            let t = Complex64::from_polar(modulus * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI));
            (
                offset.unwrap_or(-level * scale / n as f64),
                translation.unwrap_or(t),
                multiplier.unwrap_or(m),
            )
        }
    };
    let similarity = ConformalSimilarity::new(translation, multiplier)?;
    let roots = synthesize_roots(n, scale, offset, &similarity)?;
    let mut doc = InstanceDocument::points(InstanceKind::Roots, roots);
    let pair = |z: Complex64| format!("{},{}", z.re, z.im);
    doc.meta.insert("generator".into(), "synthesize".into());
    doc.meta.insert("scale".into(), pair(scale));
    doc.meta.insert("offset".into(), pair(offset));
    doc.meta.insert("level".into(), pair(chebyshev_level(n, scale, offset)));
    doc.meta.insert("translation".into(), pair(translation));
    doc.meta.insert("multiplier".into(), pair(multiplier));
    if let Some(seed) = seed {
        doc.meta.insert("seed".into(), seed.to_string());
    }
    Ok(doc)
}

fn cmd_detect(doc: &InstanceDocument, tol: f64, inellipse: bool, format: Format, io: &mut Io) -> Result<i32, Exit> {
    let polygon = doc.polygon()?;
    let check = match detect_affinely_regular(&polygon, tol) {
        Err(Error::NotConvex) => {
            writeln!(io.stderr, "not affinely regular: {}", Error::NotConvex)?;
            match format {
                Format::Json => emit_json(io, &json!({ "accepted": false, "reason": "not-convex" }))?,
                Format::Text => writeln!(io.stdout, "accepted: false (not convex)")?,
            }
            return Ok(EXIT_FAIL);
        }
        other => other?,
    };
    let accepted = check.is_accepted();
    if let Some(r) = &check.rejection {
        writeln!(io.stderr, "{r}")?;
    }
    let ellipse = if inellipse && accepted {
        Some(inscribed_midpoint_ellipse(&check.fit)?)
    } else {
        None
    };
    match format {
        Format::Json if inellipse => emit_json(
            io,
            &json!({
                "accepted": accepted,
                "ellipse": ellipse,
                "foci": ellipse.map(|e| e.foci()),
                "midpoints": polygon.midpoints().vertices(),
            }),
        )?,
        Format::Json => emit_json(
            io,
            &json!({
                "accepted": accepted,
                "relative_residual": check.fit.relative_residual(),
                "check": check,
            }),
        )?,
        Format::Text => {
            writeln!(io.stdout, "accepted: {accepted}")?;
            writeln!(io.stdout, "relative residual: {:.3e}", check.fit.relative_residual())?;
            writeln!(
                io.stdout,
                "alpha = {}, beta = {}, gamma = {}",
                fmt_c(check.fit.alpha),
                fmt_c(check.fit.beta),
                fmt_c(check.fit.gamma)
            )?;
            if let Some(e) = &ellipse {
                let (f1, f2) = e.foci();
                writeln!(
                    io.stdout,
                    "ellipse: center {}, semi-axes {:.12} {:.12}, rotation {:.12}",
                    fmt_c(e.center),
                    e.semi_major,
                    e.semi_minor,
                    e.rotation
                )?;
                writeln!(io.stdout, "foci: {}; {}", fmt_c(f1), fmt_c(f2))?;
            }
        }
    }
    Ok(if accepted { EXIT_PASS } else { EXIT_FAIL })
}

/// Largest `|f(t) - f(t + 2π/n)|` over `grid` equally spaced `t`, with
/// `f(t) = T_n(cosh s cos t + i sinh s sin t)`, and that value relative to
/// the largest `|f|`.
pub fn lemma_residual(n: usize, s: f64, grid: usize) -> Result<(f64, f64), Error> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if grid == 0 {
        return Err(Error::Invalid("grid must be at least 1".into()));
    }
    let params = EllipseTraceParams::from_confocal(s, 0.0)?;
    let period = 2.0 * PI / n as f64;
    let mut worst: f64 = 0.0;
    let mut size: f64 = 0.0;
    for j in 0..grid {
        let t = 2.0 * PI * j as f64 / grid as f64;
        let f = cheb_t(n, params.point(t));
        let g = cheb_t(n, params.point(t + period));
        worst = worst.max((f - g).norm());
        size = size.max(f.norm());
    }
    Ok((worst, if size > 0.0 { worst / size } else { worst }))
}

fn cmd_cheb_lemma(n: usize, s: f64, grid: usize, format: Format, io: &mut Io) -> Result<i32, Exit> {
    let (absolute, relative) = lemma_residual(n, s, grid)?;
    let pass = relative < LEMMA_TOLERANCE;
    match format {
        Format::Json => emit_json(
            io,
            &json!({ "n": n, "s": s, "grid": grid, "max_residual": absolute, "relative_residual": relative, "pass": pass }),
        )?,
        Format::Text => writeln!(io.stdout, "max residual {absolute:.3e} (relative {relative:.3e})")?,
    }
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

fn instance_figure(doc: &InstanceDocument, tol: &Tolerances) -> Result<svg::Figure, Exit> {
    let p = doc.polynomial()?;
    let report = verify_bocher_grace(&p, tol)?;
    let polygon = match doc.kind {
        InstanceKind::Polygon => doc.data.clone(),
        _ => report.roots.clone(),
    };
    let midpoints = (0..polygon.len())
        .map(|k| (polygon[k] + polygon[(k + 1) % polygon.len()]) / 2.0)
        .collect();
    Ok(svg::Figure {
        polygon,
        midpoints,
        ellipses: report.ellipse.into_iter().collect(),
        critical_points: report.critical_points.clone(),
        foci: report.ellipse_foci.map(|(a, b)| vec![a, b]).unwrap_or_default(),
    })
}

fn family_figure(values: &[f64]) -> Result<svg::Figure, Exit> {
    let ellipses = values.iter().map(|&s| confocal_member(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(svg::Figure {
        ellipses,
        foci: vec![c64(1.0, 0.0), c64(-1.0, 0.0)],
        ..svg::Figure::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["bocher-grace"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parse_complex_forms() {
        assert_eq!(parse_complex("1.5,-2"), Ok(c64(1.5, -2.0)));
        assert_eq!(parse_complex(" 3 "), Ok(c64(3.0, 0.0)));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("nan").is_err());
    }

    #[test]
    fn usage_errors_exit_3() {
        assert_eq!(run_with(&["frobnicate"], "").0, EXIT_INPUT);
        assert_eq!(run_with(&["synthesize"], "").0, EXIT_INPUT);
        assert_eq!(run_with(&["--help"], "").0, EXIT_PASS);
    }

    #[test]
    fn verify_from_stdin() {
        let doc = r#"{"kind": "roots", "data": [[2,1],[2,-1],[-2,1],[-2,-1]]}"#;
        let (code, out, _) = run_with(&["verify"], doc);
        assert_eq!(code, EXIT_PASS);
        let report: ReportDocument = serde_json::from_str(&out).unwrap();
        assert!(report.verdict);

        let (code, out, _) = run_with(&["verify", "--format", "text"], doc);
        assert_eq!(code, EXIT_PASS);
        assert!(out.starts_with("outcome: verified"));

        let (code, _, err) = run_with(&["verify"], "{\"kind\": \"roots\",\n \"data\": [[1,0],]}");
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn synthesize_then_verify() {
        let (code, out, _) = run_with(&["synthesize", "--n", "5"], "");
        assert_eq!(code, EXIT_PASS);
        let doc = InstanceDocument::parse(&out).unwrap();
        assert_eq!(doc.data.len(), 5);
        assert_eq!(run_with(&["verify"], &out).0, EXIT_PASS);

        let (code, _, err) = run_with(&["synthesize", "--n", "2"], "");
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("need a polygon"));
        let (code, _, err) = run_with(&["synthesize", "--n", "4", "--offset", "0.5"], "");
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("degenerate level set"));
    }

    #[test]
    fn seeded_synthesis_is_reproducible() {
        let a = run_with(&["synthesize", "--n", "7", "--seed", "42"], "").1;
        let b = run_with(&["synthesize", "--n", "7", "--seed", "42"], "").1;
        let c = run_with(&["synthesize", "--n", "7", "--seed", "43"], "").1;
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(run_with(&["verify"], &a).0, EXIT_PASS);
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma_residual(5, 1.0, 100).unwrap().1 < LEMMA_TOLERANCE);
        assert!(lemma_residual(1, 0.7, 50).unwrap().1 < LEMMA_TOLERANCE);
        assert!(lemma_residual(12, 0.1, 1000).unwrap().1 < LEMMA_TOLERANCE);
        assert!(lemma_residual(3, 0.0, 10).is_err());
        assert_eq!(run_with(&["cheb-lemma", "--n", "5", "--s", "1"], "").0, EXIT_PASS);
    }

    #[test]
    fn detect_and_inellipse() {
        let rect = r#"{"kind": "polygon", "data": [[2,1],[-2,1],[-2,-1],[2,-1]]}"#;
        assert_eq!(run_with(&["detect"], rect).0, EXIT_PASS);
        let (code, out, _) = run_with(&["inellipse"], rect);
        assert_eq!(code, EXIT_PASS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["ellipse"]["semi_major"].as_f64().unwrap() - 2.0).abs() < 1e-12);
        let trapezoid = r#"{"kind": "polygon", "data": [[0,0],[3,0],[2,1],[1,1]]}"#;
        assert_eq!(run_with(&["detect"], trapezoid).0, EXIT_FAIL);
        let star = r#"{"kind": "polygon", "data": [[0,0],[2,0],[0,2],[2,2]]}"#;
        assert_eq!(run_with(&["detect"], star).0, EXIT_FAIL);
    }
}
