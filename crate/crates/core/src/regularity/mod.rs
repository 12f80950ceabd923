//! Affinely regular polygons, the Chebyshev form of critical points, and
//! verification of the inscribed-ellipse theorem built on them.
//!
//! A convex n-gon is affinely regular when it is the image of the regular
//! n-gon of n-th roots of unity under some `z ↦ αz + βz̄ + γ`. Writing the
//! vertices as a sequence, that is the same as the discrete Fourier transform
//! of the sequence vanishing outside modes 0, 1 and n-1; the fit below reads
//! α, β, γ straight off modes 1, n-1 and 0. Midpoints of the regular n-gon lie
//! on the circle of radius `cos(π/n)`, so the midpoint inellipse of an
//! affinely regular polygon is the image of that circle.

mod critical;
mod verify;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::affine::AffineMap;
use crate::ellipse::Ellipse;
use crate::error::{Error, Result};
use crate::numeric::ensure_finite;

pub use critical::{fit_critical_form, fit_critical_form_scaled, CriticalForm, CriticalFormCheck};
pub use verify::{
    chebyshev_level, synthesize, synthesize_roots, verify_bocher_grace, verify_characterization,
    CharacterizationReport, Outcome, Tolerances, VerificationReport,
};

/// An ordered vertex list with at least three distinct vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct Polygon {
    vertices: Vec<Complex64>,
}

impl Polygon {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::NeedPolygon { n: vertices.len() });
        }
        for v in &vertices {
            ensure_finite(*v, "polygon vertex")?;
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] == vertices[j] {
                    return Err(Error::RepeatedVertex(i, j));
                }
            }
        }
        Ok(Polygon { vertices })
    }

    /// Order points counterclockwise by angle about their centroid, breaking
    /// angle ties by distance from it.
    pub fn from_unordered(points: &[Complex64]) -> Result<Self> {
        let n = points.len() as f64;
        let centroid: Complex64 = points.iter().sum::<Complex64>() / n;
        let mut sorted = points.to_vec();
        sorted.sort_by(|a, b| {
            let (da, db) = (a - centroid, b - centroid);
            da.arg()
                .total_cmp(&db.arg())
                .then(da.norm().total_cmp(&db.norm()))
        });
        Polygon::new(sorted)
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Largest pairwise vertex distance; all relative tolerances refer to it.
    pub fn scale(&self) -> f64 {
        let mut scale: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                scale = scale.max((a - b).norm());
            }
        }
        scale
    }

    pub fn edge(&self, k: usize) -> (Complex64, Complex64) {
        let n = self.len();
        (self.vertices[k % n], self.vertices[(k + 1) % n])
    }

    /// Strictly convex, counterclockwise and simple: every turn is a left
    /// turn and the turns add up to one full revolution.
    pub fn is_convex_ccw(&self) -> bool {
        let n = self.len();
        let floor = 1e-14 * self.scale().powi(2);
        let mut turning = 0.0;
        for k in 0..n {
            let (a, b) = self.edge(k);
            let (_, c) = self.edge(k + 1);
            let (u, v) = (b - a, c - b);
            let cross = u.re * v.im - u.im * v.re;
            if cross <= floor {
                return false;
            }
            turning += (v * u.conj()).arg();
        }
        (turning - 2.0 * PI).abs() < 1e-6
    }

    pub fn midpoints(&self) -> Polygon {
        let n = self.len();
        let vertices = (0..n)
            .map(|k| {
                let (a, b) = self.edge(k);
                (a + b) / 2.0
            })
            .collect();
        Polygon { vertices }
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().map(|&v| f(v)).collect())
    }

    /// The same polygon with vertex `shift` listed first.
    pub fn relabel(&self, shift: usize) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(shift % self.len());
        Polygon { vertices }
    }
}

impl TryFrom<Vec<Complex64>> for Polygon {
    type Error = Error;

    fn try_from(vertices: Vec<Complex64>) -> Result<Self> {
        Polygon::new(vertices)
    }
}

impl From<Polygon> for Vec<Complex64> {
    fn from(p: Polygon) -> Self {
        p.vertices
    }
}

pub fn midpoints(p: &Polygon) -> Polygon {
    p.midpoints()
}

/// Why a fit was not accepted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "reason")]
pub enum Rejection {
    /// Fourier energy outside modes 0, 1, n-1 (relative to the polygon scale).
    NotAffinelyRegular { relative_residual: f64 },
    /// `|α| = |β|`: the fitted image of the regular polygon is a segment.
    DegenerateImage,
    /// Critical points do not follow `α + β cos(kπ/n)` (relative to their
    /// spread).
    NotChebyshevForm { relative_residual: f64 },
    /// All critical points coincide: the form holds only with `β = 0`.
    CoincidentCriticalPoints,
}

impl std::fmt::Display for Rejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rejection::NotAffinelyRegular { relative_residual } => write!(
                f,
                "not affinely regular (Fourier residual {relative_residual:.3e} of scale)"
            ),
            Rejection::DegenerateImage => write!(f, "degenerate (collinear) image"),
            Rejection::NotChebyshevForm { relative_residual } => write!(
                f,
                "critical points not of the form α+β·cos(kπ/n) (residual {relative_residual:.3e} of spread)"
            ),
            Rejection::CoincidentCriticalPoints => {
                write!(f, "β=0 (circle case): all critical points coincide")
            }
        }
    }
}

/// Witness `v_k ≈ α ω^k + β ω^{-k} + γ` (ω = e^{2πi/n}, k = 0..n-1) for a
/// polygon's vertex sequence.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularityFit {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub n: usize,
    /// RMS distance between the vertices and the fitted affine image.
    pub residual: f64,
    /// Largest pairwise vertex distance of the source polygon.
    pub scale: f64,
}

impl RegularityFit {
    pub fn relative_residual(&self) -> f64 {
        self.residual / self.scale
    }

    /// `z ↦ αz + βz̄ + γ`, which sends the k-th n-th root of unity to the k-th
    /// fitted vertex.
    pub fn affine_map(&self) -> AffineMap {
        AffineMap {
            alpha: self.alpha,
            beta: self.beta,
            gamma: self.gamma,
        }
    }

    pub fn vertex(&self, k: usize) -> Complex64 {
        let w = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / self.n as f64);
        self.alpha * w + self.beta * w.conj() + self.gamma
    }

    /// Radius of the circle through the midpoints of the regular n-gon.
    pub fn inner_radius(&self) -> f64 {
        (PI / self.n as f64).cos()
    }

    /// Foci of the midpoint inellipse in closed form, `γ ± 2ρ sqrt(αβ)`.
    pub fn midpoint_ellipse_foci(&self) -> (Complex64, Complex64) {
        if self.beta.norm() <= BETA_NOISE * self.alpha.norm() {
            return (self.gamma, self.gamma);
        }
        let offset = 2.0 * self.inner_radius() * (self.alpha * self.beta).sqrt();
        (self.gamma + offset, self.gamma - offset)
    }

    /// Whether the polygon is a similarity image of the regular n-gon
    /// (`β ≈ 0`); its inellipse is then a circle.
    pub fn is_similarity_image(&self, tol: f64) -> bool {
        self.beta.norm() <= tol * self.scale
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularityCheck {
    pub fit: RegularityFit,
    pub rejection: Option<Rejection>,
    /// Accepted with `β ≈ 0`.
    pub similarity_image: bool,
}

impl RegularityCheck {
    pub fn is_accepted(&self) -> bool {
        self.rejection.is_none()
    }
}

/// Fourier coefficients `c_m = (1/n) Σ_k v_k ω^{-mk}`.
fn fourier(vertices: &[Complex64]) -> Vec<Complex64> {
    let n = vertices.len();
    (0..n)
        .map(|m| {
            vertices
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    let angle = -2.0 * PI * ((m * k) % n) as f64 / n as f64;
                    v * Complex64::from_polar(1.0, angle)
                })
                .sum::<Complex64>()
                / n as f64
        })
        .collect()
}

/// Fit and judge affine regularity. The polygon must be convex and
/// counterclockwise.
pub fn detect_affinely_regular(polygon: &Polygon, tol: f64) -> Result<RegularityCheck> {
    if !polygon.is_convex_ccw() {
        return Err(Error::NotConvex);
    }
    let n = polygon.len();
    let coeffs = fourier(polygon.vertices());
    let residual = coeffs
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != 0 && m != 1 && m != n - 1)
        .map(|(_, c)| c.norm_sqr())
        .fold(0.0, |acc, x| acc + x)
        .sqrt();
    let fit = RegularityFit {
        alpha: coeffs[1],
        beta: coeffs[n - 1],
        gamma: coeffs[0],
        n,
        residual,
        scale: polygon.scale(),
    };
    let rejection = if residual > tol * fit.scale {
        Some(Rejection::NotAffinelyRegular {
            relative_residual: fit.relative_residual(),
        })
    } else if (fit.alpha.norm() - fit.beta.norm()).abs() <= tol * fit.scale {
        Some(Rejection::DegenerateImage)
    } else {
        None
    };
    Ok(RegularityCheck {
        similarity_image: rejection.is_none() && fit.is_similarity_image(tol),
        fit,
        rejection,
    })
}

const BETA_NOISE: f64 = 64.0 * f64::EPSILON;

/// The midpoint inellipse: image of the circle of radius `cos(π/n)` under
/// the fitted affine map.
///
/// A `|β|` within rounding of `|α|` is taken as zero: the foci separate like
/// `sqrt|β|`, so leftover noise in β would otherwise split a circle's
/// centre into two foci about `sqrt(eps)` apart.
pub fn inscribed_midpoint_ellipse(fit: &RegularityFit) -> Result<Ellipse> {
    let rho = fit.inner_radius();
    let (ma, mut mb) = (fit.alpha.norm(), fit.beta.norm());
    if mb <= BETA_NOISE * ma {
        mb = 0.0;
    }
    if (ma - mb).abs() <= crate::affine::RANK_TOL * (ma + mb) {
        return Err(Error::SegmentImage);
    }
    let rotation = if mb == 0.0 {
        0.0
    } else {
        (fit.alpha.arg() + fit.beta.arg()) / 2.0
    };
    Ellipse::new(fit.gamma, rho * (ma + mb), rho * (ma - mb).abs(), rotation)
}

/// Regular n-gon `center + radius e^{i(phase + 2πk/n)}`; handy for tests and
/// examples.
pub fn regular_polygon(n: usize, center: Complex64, radius: f64, phase: f64) -> Result<Polygon> {
    Polygon::new(
        (0..n)
            .map(|k| center + Complex64::from_polar(radius, phase + 2.0 * PI * k as f64 / n as f64))
            .collect(),
    )
}

/// The polygon `α ω^k + β ω^{-k} + γ`, k = 0..n-1.
pub fn affine_regular_polygon(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
) -> Result<Polygon> {
    let fit = RegularityFit {
        alpha,
        beta,
        gamma,
        n,
        residual: 0.0,
        scale: 1.0,
    };
    Polygon::new((0..n).map(|k| fit.vertex(k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellipse::pair_distance;
    use crate::numeric::c64;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn rectangle() -> Polygon {
        Polygon::from_unordered(&[c64(2.0, 1.0), c64(-2.0, 1.0), c64(-2.0, -1.0), c64(2.0, -1.0)])
            .unwrap()
    }

    #[test]
    fn polygon_validation() {
        assert_eq!(Polygon::new(vec![c64(0.0, 0.0), c64(1.0, 0.0)]), Err(Error::NeedPolygon { n: 2 }));
        assert_eq!(
            Polygon::new(vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)]),
            Err(Error::RepeatedVertex(0, 2))
        );
        let tri = Polygon::new(vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 1.0)]).unwrap();
        assert!(tri.is_convex_ccw());
        let cw = Polygon::new(vec![c64(0.0, 0.0), c64(0.0, 1.0), c64(1.0, 0.0)]).unwrap();
        assert!(!cw.is_convex_ccw());
        let collinear = Polygon::new(vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)]).unwrap();
        assert!(!collinear.is_convex_ccw());
        // pentagram: every turn is a left turn, but it winds twice
        let star = Polygon::new((0..5).map(|k| Complex64::from_polar(1.0, 4.0 * PI * k as f64 / 5.0)).collect())
            .unwrap();
        assert!(!star.is_convex_ccw());
    }

    #[test]
    fn from_unordered_orders_counterclockwise() {
        let p = rectangle();
        assert!(p.is_convex_ccw());
        assert_eq!(p.vertices()[0], c64(-2.0, -1.0));
    }

    #[test]
    fn midpoint_examples() {
        let tri = Polygon::new(vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 1.0)]).unwrap();
        assert_eq!(tri.midpoints().vertices(), &[c64(0.5, 0.0), c64(0.5, 0.5), c64(0.0, 0.5)]);

        let square = regular_polygon(4, c64(0.0, 0.0), 1.0, 0.0).unwrap();
        let expected = [c64(0.5, 0.5), c64(-0.5, 0.5), c64(-0.5, -0.5), c64(0.5, -0.5)];
        for (m, e) in square.midpoints().vertices().iter().zip(expected) {
            assert!(close(*m, e, 1e-15));
        }

        for n in 3..10 {
            let p = regular_polygon(n, c64(0.0, 0.0), 1.0, 0.0).unwrap();
            let rho = (PI / n as f64).cos();
            for (k, m) in p.midpoints().vertices().iter().enumerate() {
                let expected = Complex64::from_polar(rho, PI / n as f64 + 2.0 * PI * k as f64 / n as f64);
                assert!(close(*m, expected, 1e-14));
            }
        }
    }

    #[test]
    fn detect_examples() {
        let pentagon = regular_polygon(5, c64(0.0, 0.0), 1.0, 0.0).unwrap();
        let check = detect_affinely_regular(&pentagon, 1e-9).unwrap();
        assert!(check.is_accepted() && check.similarity_image);
        assert!(close(check.fit.alpha, c64(1.0, 0.0), 1e-15));
        assert!(check.fit.beta.norm() < 1e-15 && check.fit.residual < 1e-15);

        let check = detect_affinely_regular(&rectangle(), 1e-9).unwrap();
        assert!(check.is_accepted() && !check.similarity_image);
        assert!(check.fit.gamma.norm() < 1e-15 && check.fit.residual < 1e-15);

        let kite = Polygon::new(vec![c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, -0.5)]).unwrap();
        let check = detect_affinely_regular(&kite, 1e-6).unwrap();
        assert!(matches!(check.rejection, Some(Rejection::NotAffinelyRegular { .. })));
        assert!(check.fit.residual > 1e-2 * check.fit.scale);
        // c_2 = (v0 - v1 + v2 - v3)/4 = 0.5i/4
        assert!((check.fit.residual - 0.125).abs() < 1e-15);

        let cw = Polygon::new(vec![c64(0.0, 0.0), c64(0.0, 1.0), c64(1.0, 0.0)]).unwrap();
        assert_eq!(detect_affinely_regular(&cw, 1e-9), Err(Error::NotConvex));
    }

    #[test]
    fn triangles_are_always_regular() {
        let tri = Polygon::new(vec![c64(0.1, -0.3), c64(3.0, 0.2), c64(-0.4, 0.9)]).unwrap();
        let check = detect_affinely_regular(&tri, 1e-12).unwrap();
        assert!(check.is_accepted());
        for k in 0..3 {
            assert!(close(check.fit.vertex(k), tri.vertices()[k], 1e-14));
        }
    }

    #[test]
    fn detection_is_relabel_and_similarity_invariant() {
        let p = affine_regular_polygon(7, c64(1.2, 0.3), c64(0.2, -0.5), c64(-1.0, 2.0)).unwrap();
        let kite = Polygon::new(vec![c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, -0.5)]).unwrap();
        for poly in [p, kite] {
            let base = detect_affinely_regular(&poly, 1e-6).unwrap();
            for shift in 0..poly.len() {
                let r = detect_affinely_regular(&poly.relabel(shift), 1e-6).unwrap();
                assert_eq!(r.is_accepted(), base.is_accepted());
                assert!((r.fit.relative_residual() - base.fit.relative_residual()).abs() < 1e-10);
            }
            let s = |z: Complex64| c64(3.0, -1.0) + c64(-0.4, 2.2) * z;
            let r = detect_affinely_regular(&poly.map(s).unwrap(), 1e-6).unwrap();
            assert_eq!(r.is_accepted(), base.is_accepted());
            assert!((r.fit.relative_residual() - base.fit.relative_residual()).abs() < 1e-10);
            assert!((r.fit.residual - base.fit.residual * c64(-0.4, 2.2).norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn inellipse_examples() {
        for n in 3..9 {
            let p = regular_polygon(n, c64(0.0, 0.0), 1.0, 0.0).unwrap();
            let fit = detect_affinely_regular(&p, 1e-9).unwrap().fit;
            let e = inscribed_midpoint_ellipse(&fit).unwrap();
            assert!(e.is_circle() || (e.semi_major - e.semi_minor) < 1e-15);
            assert!((e.semi_major - (PI / n as f64).cos()).abs() < 1e-14);
        }

        let fit = detect_affinely_regular(&rectangle(), 1e-9).unwrap().fit;
        let e = inscribed_midpoint_ellipse(&fit).unwrap();
        assert!((e.semi_major - 2.0).abs() < 1e-14 && (e.semi_minor - 1.0).abs() < 1e-14);
        assert!(e.rotation.abs() < 1e-14 && e.center.norm() < 1e-15);
        let r3 = 3f64.sqrt();
        assert!(pair_distance(e.foci(), (c64(r3, 0.0), c64(-r3, 0.0))) < 1e-14);
        assert!(pair_distance(fit.midpoint_ellipse_foci(), (c64(r3, 0.0), c64(-r3, 0.0))) < 1e-14);
    }

    #[test]
    fn inellipse_passes_through_midpoints() {
        let p = affine_regular_polygon(9, c64(-0.7, 1.1), c64(0.4, 0.3), c64(2.0, 0.5)).unwrap();
        let check = detect_affinely_regular(&p, 1e-9).unwrap();
        assert!(check.is_accepted());
        let e = inscribed_midpoint_ellipse(&check.fit).unwrap();
        for m in p.midpoints().vertices() {
            assert!(e.contains_point(*m, 1e-12));
        }
        for k in 0..9 {
            let (a, b) = p.edge(k);
            let t = e.segment_tangency(a, b, 1e-10).unwrap();
            assert!(t.tangent_at().is_some());
            assert!((t.param - 0.5).abs() < 1e-10);
        }
        assert!(pair_distance(e.foci(), check.fit.midpoint_ellipse_foci()) < 1e-12);
    }
}
