use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Rejection;
use crate::error::{Error, Result};
use crate::numeric::{c64, PointMultiset};

/// Fit of critical points to `α + β cos(kπ/n)`, k = 1..n-1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalForm {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub n: usize,
    /// RMS distance between matched points and `α + β cos(kπ/n)`.
    pub residual: f64,
    /// Largest pairwise distance among the points.
    pub spread: f64,
}

impl CriticalForm {
    /// `α ± β cos(π/n)`, the outermost two values of the form.
    pub fn extremes(&self) -> (Complex64, Complex64) {
        let offset = self.beta * (PI / self.n as f64).cos();
        (self.alpha + offset, self.alpha - offset)
    }

    pub fn relative_residual(&self) -> f64 {
        if self.spread == 0.0 {
            0.0
        } else {
            self.residual / self.spread
        }
    }

    /// The n-1 model points `α + β cos(kπ/n)`.
    pub fn model_points(&self) -> Vec<Complex64> {
        (1..self.n)
            .map(|k| self.alpha + self.beta * (k as f64 * PI / self.n as f64).cos())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalFormCheck {
    pub form: CriticalForm,
    pub rejection: Option<Rejection>,
}

impl CriticalFormCheck {
    pub fn is_accepted(&self) -> bool {
        self.rejection.is_none()
    }

    /// Either accepted, or rejected only because `β = 0`.
    pub fn holds_allowing_zero_beta(&self) -> bool {
        matches!(self.rejection, None | Some(Rejection::CoincidentCriticalPoints))
    }
}

/// Fit with the points' own spread as the reference scale.
pub fn fit_critical_form(points: &PointMultiset, n: usize, tol: f64) -> Result<CriticalFormCheck> {
    fit_critical_form_scaled(points, n, tol, 0.0)
}

/// Fit `α + β cos(kπ/n)` to `n - 1` points.
///
/// The points are projected onto their total-least-squares line, ordered
/// along it, and matched in order with `cos(kπ/n)` in both orientations;
/// each matching is a linear least-squares problem for α and β, and the
/// better one is kept, with the sign of β chosen so that `Re β > 0`. The
/// form is rejected with `β = 0` when the points' spread is below
/// `tol * max(spread, scale)`; `scale` lets a caller with an outside length
/// (the root polygon) decide when points count as coincident.
pub fn fit_critical_form_scaled(
    points: &PointMultiset,
    n: usize,
    tol: f64,
    scale: f64,
) -> Result<CriticalFormCheck> {
    if n < 3 {
        return Err(Error::NeedPolygon { n });
    }
    if points.len() != n - 1 {
        return Err(Error::Cardinality {
            expected: n - 1,
            found: points.len(),
        });
    }
    let pts = points.points();
    let m = pts.len() as f64;
    let mean: Complex64 = pts.iter().sum::<Complex64>() / m;
    let spread = points.spread();
    let reference = spread.max(scale);

    if spread <= tol * reference {
        let residual = (pts.iter().map(|p| (p - mean).norm_sqr()).sum::<f64>() / m).sqrt();
        return Ok(CriticalFormCheck {
            form: CriticalForm {
                alpha: mean,
                beta: c64(0.0, 0.0),
                n,
                residual,
                spread,
            },
            rejection: Some(Rejection::CoincidentCriticalPoints),
        });
    }

    // principal direction: arg(Σ d²)/2
    let second_moment: Complex64 = pts.iter().map(|p| (p - mean) * (p - mean)).sum();
    let direction = if second_moment.norm() > 0.0 {
        Complex64::from_polar(1.0, second_moment.arg() / 2.0)
    } else {
        let d = pts.iter().map(|p| p - mean).find(|d| d.norm() > 0.0).unwrap();
        d / d.norm()
    };
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| {
        let ti = ((pts[i] - mean) * direction.conj()).re;
        let tj = ((pts[j] - mean) * direction.conj()).re;
        ti.total_cmp(&tj)
    });
    let ordered: Vec<Complex64> = order.iter().map(|&i| pts[i]).collect();

    // cos(kπ/n) for k = n-1 down to 1: increasing
    let ascending: Vec<f64> = (1..n).rev().map(|k| (k as f64 * PI / n as f64).cos()).collect();
    let descending: Vec<f64> = ascending.iter().rev().copied().collect();

    let a = regress(&ordered, &ascending, n, spread);
    let b = regress(&ordered, &descending, n, spread);
    let mut form = if b.residual < a.residual { b } else { a };
    // the model set is symmetric under β -> -β; pick Re β > 0
    if form.beta.re < 0.0 || (form.beta.re == 0.0 && form.beta.im < 0.0) {
        form.beta = -form.beta;
    }

    let rejection = if form.residual > tol * spread {
        Some(Rejection::NotChebyshevForm {
            relative_residual: form.relative_residual(),
        })
    } else if form.beta.norm() <= tol * reference {
        Some(Rejection::CoincidentCriticalPoints)
    } else {
        None
    };
    Ok(CriticalFormCheck { form, rejection })
}

/// Least squares for `p_j ≈ α + β x_j` with real `x_j`.
fn regress(points: &[Complex64], x: &[f64], n: usize, spread: f64) -> CriticalForm {
    let m = points.len() as f64;
    let x_mean = x.iter().sum::<f64>() / m;
    let p_mean: Complex64 = points.iter().sum::<Complex64>() / m;
    let sxx: f64 = x.iter().map(|xi| (xi - x_mean).powi(2)).sum();
    let sxp: Complex64 = x
        .iter()
        .zip(points)
        .map(|(xi, p)| (p - p_mean) * (xi - x_mean))
        .sum();
    let beta = sxp / sxx;
    let alpha = p_mean - beta * x_mean;
    let residual = (x
        .iter()
        .zip(points)
        .map(|(xi, p)| (p - alpha - beta * xi).norm_sqr())
        .sum::<f64>()
        / m)
        .sqrt();
    CriticalForm {
        alpha,
        beta,
        n,
        residual,
        spread,
    }
}
