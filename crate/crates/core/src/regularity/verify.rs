use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    detect_affinely_regular, fit_critical_form_scaled, inscribed_midpoint_ellipse,
    CriticalFormCheck, Polygon, RegularityCheck, Rejection,
};
use crate::affine::ConformalSimilarity;
use crate::ellipse::{pair_distance, Ellipse};
use crate::error::{Error, Result};
use crate::numeric::{critical_points_with, ensure_finite, find_roots_with, PointMultiset, Polynomial, RootConfig};

/// Tolerances of a verification run. `regular`, `critical` and `focus` are
/// relative to the root polygon's scale (largest pairwise root distance);
/// `tangency` and `midpoint` bound dimensionless residuals.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub regular: f64,
    pub critical: f64,
    pub focus: f64,
    pub tangency: f64,
    pub midpoint: f64,
    pub roots: RootConfig,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            regular: 1e-6,
            critical: 1e-6,
            focus: 1e-7,
            tangency: 1e-7,
            midpoint: 1e-9,
            roots: RootConfig::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// Hypothesis holds and every stage passed.
    Verified,
    /// Hypothesis holds but some stage failed.
    Failed,
    /// The critical points are not of the form `α + β cos(kπ/n)` with
    /// `β ≠ 0`, or the roots do not form a convex polygon.
    HypothesisNotSatisfied,
}

/// Stage-by-stage record of a verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub degree: usize,
    /// Largest pairwise root distance.
    pub scale: f64,
    /// Roots, counterclockwise when they form a polygon.
    pub roots: Vec<Complex64>,
    pub critical_points: Vec<Complex64>,
    pub critical_form: CriticalFormCheck,
    pub regularity: Option<RegularityCheck>,
    pub ellipse: Option<Ellipse>,
    pub ellipse_foci: Option<(Complex64, Complex64)>,
    /// `α ± β cos(π/n)` from the critical form.
    pub extreme_critical_points: (Complex64, Complex64),
    /// Largest `|q(m) - 1|` over the side midpoints, q the ellipse's
    /// quadratic form.
    pub midpoint_residual: Option<f64>,
    /// Per side, the larger of `|1 - h²|` (normalised tangency discriminant)
    /// and the distance of the touching point from the side's midpoint as a
    /// fraction of the side.
    pub tangency_residuals: Vec<f64>,
    /// Distance between the ellipse's foci and the extreme critical points,
    /// as unordered pairs.
    pub focus_error: Option<f64>,
    pub outcome: Outcome,
    pub diagnostics: Vec<String>,
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    pub fn hypothesis_holds(&self) -> bool {
        self.outcome != Outcome::HypothesisNotSatisfied
    }
}

/// Run the full pipeline on `p`: Chebyshev form of the critical points,
/// affine regularity of the root polygon, its midpoint inellipse, tangency
/// of every side at its midpoint, and agreement of the foci with the extreme
/// critical points.
pub fn verify_bocher_grace(p: &Polynomial, tol: &Tolerances) -> Result<VerificationReport> {
    let n = p.degree();
    if n < 3 {
        return Err(Error::NeedPolygon { n });
    }
    let roots = find_roots_with(p, &tol.roots)?;
    let critical = critical_points_with(p, &tol.roots)?;
    let root_set = PointMultiset::from(roots.points().to_vec());
    let scale = root_set.spread();

    let critical_form = fit_critical_form_scaled(&critical, n, tol.critical, scale)?;
    let extreme = critical_form.form.extremes();
    let mut diagnostics = Vec::new();
    let mut hypothesis = true;
    if let Some(r) = &critical_form.rejection {
        hypothesis = false;
        diagnostics.push(format!("hypothesis not satisfied: {r}"));
    }

    let polygon = match Polygon::from_unordered(roots.points()) {
        Ok(poly) if poly.is_convex_ccw() => Some(poly),
        Ok(_) => {
            hypothesis = false;
            diagnostics.push("hypothesis not satisfied: roots do not form a convex polygon".into());
            None
        }
        Err(e) => {
            hypothesis = false;
            diagnostics.push(format!("hypothesis not satisfied: repeated roots ({e})"));
            None
        }
    };

    let mut report = VerificationReport {
        degree: n,
        scale,
        roots: polygon
            .as_ref()
            .map(|p| p.vertices().to_vec())
            .unwrap_or_else(|| roots.points().to_vec()),
        critical_points: critical.points().to_vec(),
        critical_form,
        regularity: None,
        ellipse: None,
        ellipse_foci: None,
        extreme_critical_points: extreme,
        midpoint_residual: None,
        tangency_residuals: Vec::new(),
        focus_error: None,
        outcome: Outcome::HypothesisNotSatisfied,
        diagnostics,
    };

    let mut passed = true;
    if let Some(polygon) = &polygon {
        let regularity = detect_affinely_regular(polygon, tol.regular)?;
        if let Some(r) = &regularity.rejection {
            passed = false;
            report.diagnostics.push(format!("regularity: {r}"));
        }
        if let Ok(ellipse) = inscribed_midpoint_ellipse(&regularity.fit) {
            let midpoint_residual = polygon
                .midpoints()
                .vertices()
                .iter()
                .map(|&m| (ellipse.quadratic_form(m) - 1.0).abs())
                .fold(0.0, f64::max);
            if midpoint_residual.is_nan() || midpoint_residual > tol.midpoint {
                passed = false;
                report
                    .diagnostics
                    .push(format!("midpoints off the ellipse (residual {midpoint_residual:.3e})"));
            }
            let mut tangency = Vec::with_capacity(n);
            for k in 0..n {
                let (a, b) = polygon.edge(k);
                let t = ellipse.segment_tangency(a, b, tol.tangency)?;
                tangency.push(t.discriminant.abs().max((t.param - 0.5).abs()));
            }
            if let Some(worst) = tangency.iter().copied().reduce(f64::max) {
                if worst.is_nan() || worst > tol.tangency {
                    passed = false;
                    report
                        .diagnostics
                        .push(format!("a side is not tangent at its midpoint (residual {worst:.3e})"));
                }
            }
            let foci = ellipse.foci();
            let focus_error = pair_distance(foci, extreme);
            if focus_error.is_nan() || focus_error > tol.focus * scale {
                passed = false;
                report.diagnostics.push(format!(
                    "foci differ from the extreme critical points by {focus_error:.3e}"
                ));
            }
            report.ellipse = Some(ellipse);
            report.ellipse_foci = Some(foci);
            report.midpoint_residual = Some(midpoint_residual);
            report.tangency_residuals = tangency;
            report.focus_error = Some(focus_error);
        } else {
            passed = false;
        }
        report.regularity = Some(regularity);
    }

    report.outcome = match (hypothesis, passed) {
        (false, _) => Outcome::HypothesisNotSatisfied,
        (true, true) => Outcome::Verified,
        (true, false) => Outcome::Failed,
    };
    Ok(report)
}

/// `-n * offset / scale`: the value `T_n` takes on every root of
/// `(scale/n) T_n + offset`.
pub fn chebyshev_level(n: usize, scale: Complex64, offset: Complex64) -> Complex64 {
    -(n as f64) * offset / scale
}

/// Roots of `(scale/n) T_n(z) + offset`, mapped through `similarity`.
///
/// With `L` the level, the roots are `cos((acos L + 2πk)/n)`. Levels on the
/// real segment [-1, 1] give collinear roots and are refused.
pub fn synthesize_roots(
    n: usize,
    scale: Complex64,
    offset: Complex64,
    similarity: &ConformalSimilarity,
) -> Result<Vec<Complex64>> {
    if n < 3 {
        return Err(Error::NeedPolygon { n });
    }
    ensure_finite(scale, "synthesis scale")?;
    ensure_finite(offset, "synthesis offset")?;
    if scale.norm() == 0.0 {
        return Err(Error::Invalid("synthesis scale must be nonzero".into()));
    }
    let level = chebyshev_level(n, scale, offset);
    if level.im.abs() <= 1e-6 && level.re.abs() <= 1.0 + 1e-6 {
        return Err(Error::DegenerateLevelSet { level });
    }
    let angle = level.acos();
    Ok((0..n)
        .map(|k| {
            let z = ((angle + 2.0 * PI * k as f64) / n as f64).cos();
            similarity.apply(z)
        })
        .collect())
}

/// Monic polynomial whose critical points are `S(cos(kπ/n))`.
pub fn synthesize(
    n: usize,
    scale: Complex64,
    offset: Complex64,
    similarity: &ConformalSimilarity,
) -> Result<Polynomial> {
    Ok(Polynomial::from_roots(&synthesize_roots(n, scale, offset, similarity)?))
}

/// Both sides of the characterization for one polygon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub regularity: RegularityCheck,
    pub critical_form: CriticalFormCheck,
    /// The polygon is affinely regular.
    pub regular: bool,
    /// The critical points of the polygon's polynomial are of the form
    /// `α + β cos(kπ/n)`, β = 0 allowed.
    pub chebyshev_form: bool,
    /// `β = 0` on both sides or on neither.
    pub circle_cases_agree: bool,
}

impl CharacterizationReport {
    pub fn agree(&self) -> bool {
        self.regular == self.chebyshev_form && self.circle_cases_agree
    }
}

/// Decide affine regularity of `polygon` and, independently, the form of
/// the critical points of `prod (z - v_k)`.
///
/// Similarity images of the regular n-gon are affinely regular with `β = 0`
/// and their critical points all coincide; both sides count that case as
/// holding, and `circle_cases_agree` records whether they agree on it.
pub fn verify_characterization(polygon: &Polygon, tol: f64) -> Result<CharacterizationReport> {
    let regularity = detect_affinely_regular(polygon, tol)?;
    let p = Polynomial::from_roots(polygon.vertices());
    let critical = critical_points_with(&p, &RootConfig::default())?;
    let critical_form = fit_critical_form_scaled(&critical, polygon.len(), tol, polygon.scale())?;
    let regular = regularity.is_accepted();
    let chebyshev_form = critical_form.holds_allowing_zero_beta();
    let zero_beta = critical_form.rejection == Some(Rejection::CoincidentCriticalPoints);
    Ok(CharacterizationReport {
        circle_cases_agree: !(regular && chebyshev_form) || regularity.similarity_image == zero_beta,
        regularity,
        critical_form,
        regular,
        chebyshev_form,
    })
}
