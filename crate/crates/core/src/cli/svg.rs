//! Deterministic SVG figures. Mathematical y points up; the writer flips it.

use std::fmt::Write;

use num_complex::Complex64;

use crate::ellipse::Ellipse;

/// Segments used for the polyline form of an ellipse.
pub const POLYLINE_SEGMENTS: usize = 64;

/// Contents of a figure, one field per layer.
#[derive(Clone, Debug, Default)]
pub struct Figure {
    pub polygon: Vec<Complex64>,
    pub midpoints: Vec<Complex64>,
    pub ellipses: Vec<Ellipse>,
    pub critical_points: Vec<Complex64>,
    pub foci: Vec<Complex64>,
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Half-extents of the ellipse's bounding box along x and y.
fn half_extents(e: &Ellipse) -> (f64, f64) {
    let (c, s) = (e.rotation.cos(), e.rotation.sin());
    let (a, b) = (e.semi_major, e.semi_minor);
    ((a * a * c * c + b * b * s * s).sqrt(), (a * a * s * s + b * b * c * c).sqrt())
}

impl Figure {
    fn bounds(&self) -> Option<(f64, f64, f64, f64)> {
        let mut boxes: Vec<(f64, f64, f64, f64)> = self
            .polygon
            .iter()
            .chain(&self.midpoints)
            .chain(&self.critical_points)
            .chain(&self.foci)
            .map(|z| (z.re, z.im, z.re, z.im))
            .collect();
        for e in &self.ellipses {
            let (hx, hy) = half_extents(e);
            boxes.push((e.center.re - hx, e.center.im - hy, e.center.re + hx, e.center.im + hy));
        }
        boxes.into_iter().reduce(|a, b| (a.0.min(b.0), a.1.min(b.1), a.2.max(b.2), a.3.max(b.3)))
    }

    /// Render; `polyline` draws ellipses as closed 64-segment polylines
    /// instead of `<ellipse>` elements.
    pub fn render(&self, polyline: bool) -> String {
        let (x0, y0, x1, y1) = self.bounds().unwrap_or((-1.0, -1.0, 1.0, 1.0));
        let extent = (x1 - x0).max(y1 - y0);
        let extent = if extent > 0.0 { extent } else { 1.0 };
        let margin = 0.1 * extent;
        let marker = 0.012 * extent;
        let stroke = 0.004 * extent;
        let pt = |z: Complex64| format!("{},{}", num(z.re), num(-z.im));

        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
            num(x0 - margin),
            num(-y1 - margin),
            num(x1 - x0 + 2.0 * margin),
            num(y1 - y0 + 2.0 * margin)
        )
        .unwrap();

        let circles = |out: &mut String, class: &str, points: &[Complex64], fill: &str| {
            for z in points {
                writeln!(
                    out,
                    r#"    <circle class="{class}" cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
                    num(z.re),
                    num(-z.im),
                    num(marker)
                )
                .unwrap();
            }
        };

        writeln!(out, r#"  <g id="polygon" fill="none" stroke="black" stroke-width="{}">"#, num(stroke)).unwrap();
        if !self.polygon.is_empty() {
            let pts: Vec<String> = self.polygon.iter().map(|&z| pt(z)).collect();
            writeln!(out, r#"    <polygon points="{}"/>"#, pts.join(" ")).unwrap();
        }
        circles(&mut out, "vertex", &self.polygon, "black");
        out.push_str("  </g>\n");

        out.push_str("  <g id=\"midpoints\">\n");
        circles(&mut out, "midpoint", &self.midpoints, "steelblue");
        out.push_str("  </g>\n");

        writeln!(out, r#"  <g id="ellipse" fill="none" stroke="steelblue" stroke-width="{}">"#, num(stroke)).unwrap();
        for e in &self.ellipses {
            if polyline {
                let mut pts: Vec<String> = e.trace(POLYLINE_SEGMENTS).into_iter().map(pt).collect();
                pts.push(pts[0].clone());
                writeln!(out, r#"    <polyline class="ellipse" points="{}"/>"#, pts.join(" ")).unwrap();
            } else {
                writeln!(
                    out,
                    r#"    <ellipse class="ellipse" cx="{cx}" cy="{cy}" rx="{}" ry="{}" transform="rotate({} {cx} {cy})"/>"#,
                    num(e.semi_major),
                    num(e.semi_minor),
                    num(-e.rotation.to_degrees()),
                    cx = num(e.center.re),
                    cy = num(-e.center.im),
                )
                .unwrap();
            }
        }
        out.push_str("  </g>\n");

        out.push_str("  <g id=\"critical-points\">\n");
        circles(&mut out, "critical-point", &self.critical_points, "firebrick");
        out.push_str("  </g>\n");

        writeln!(out, r#"  <g id="foci" fill="none" stroke="darkorange" stroke-width="{}">"#, num(stroke)).unwrap();
        for z in &self.foci {
            let (x, y) = (z.re, -z.im);
            let r = 1.8 * marker;
            writeln!(
                out,
                r#"    <path class="focus" d="M {} {} L {} {} M {} {} L {} {}"/>"#,
                num(x - r),
                num(y - r),
                num(x + r),
                num(y + r),
                num(x - r),
                num(y + r),
                num(x + r),
                num(y - r)
            )
            .unwrap();
        }
        out.push_str("  </g>\n</svg>\n");
        out
    }
}
