//! Conformal similarities `z ↦ t + m z` and affine maps
//! `z ↦ α z + β conj(z) + γ` of the complex plane.
//!
//! An affine map with `|α| ≠ |β|` factors as `S ∘ A ∘ R`: a rotation
//! `R(z) = e^{iθ} z`, the purely affine
//! `A(z) = (a+b)/(2c) z + (a-b)/(2c) conj(z)` that sends the unit circle to an
//! ellipse with foci ±1, and a similarity `S(z) = c e^{iφ} z + γ`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::chebyshev::EllipseTraceParams;
use crate::ellipse::Ellipse;
use crate::error::{Error, Result};
use crate::numeric::{c64, ensure_finite};

/// Relative tolerance for deciding `|α| = |β|`.
pub const RANK_TOL: f64 = 1e-12;

/// `z ↦ translation + multiplier * z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConformalSimilarity {
    pub translation: Complex64,
    pub multiplier: Complex64,
}

impl ConformalSimilarity {
    pub fn new(translation: Complex64, multiplier: Complex64) -> Result<Self> {
        ensure_finite(translation, "similarity translation")?;
        ensure_finite(multiplier, "similarity multiplier")?;
        if multiplier.norm() == 0.0 {
            return Err(Error::ZeroMultiplier);
        }
        Ok(ConformalSimilarity { translation, multiplier })
    }

    pub fn identity() -> Self {
        ConformalSimilarity {
            translation: c64(0.0, 0.0),
            multiplier: c64(1.0, 0.0),
        }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.translation + self.multiplier * z
    }

    pub fn inverse(&self) -> ConformalSimilarity {
        let m = self.multiplier.inv();
        ConformalSimilarity {
            translation: -self.translation * m,
            multiplier: m,
        }
    }

    /// Image of an ellipse; eccentricity is unchanged.
    pub fn map_ellipse(&self, e: &Ellipse) -> Ellipse {
        let scale = self.multiplier.norm();
        Ellipse::new(
            self.apply(e.center),
            e.semi_major * scale,
            e.semi_minor * scale,
            e.rotation + self.multiplier.arg(),
        )
        .expect("similarity image of a valid ellipse")
    }

    /// The same map viewed as an affine map with zero antilinear part.
    pub fn as_affine(&self) -> AffineMap {
        AffineMap {
            alpha: self.multiplier,
            beta: c64(0.0, 0.0),
            gamma: self.translation,
        }
    }
}

pub fn apply_similarity(s: &ConformalSimilarity, z: Complex64) -> Complex64 {
    s.apply(z)
}

/// `z ↦ alpha z + beta conj(z) + gamma`.
///
/// Construction accepts any finite coefficients so that inverses and
/// compositions are representable; operations that need a proper affine map
/// (`alpha ≠ 0`, `beta ≠ 0`, `|alpha| ≠ |beta|`) check it themselves.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineMap {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
}

impl AffineMap {
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self> {
        ensure_finite(alpha, "affine alpha")?;
        ensure_finite(beta, "affine beta")?;
        ensure_finite(gamma, "affine gamma")?;
        Ok(AffineMap { alpha, beta, gamma })
    }

    pub fn identity() -> Self {
        AffineMap {
            alpha: c64(1.0, 0.0),
            beta: c64(0.0, 0.0),
            gamma: c64(0.0, 0.0),
        }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.alpha * z + self.beta * z.conj() + self.gamma
    }

    /// Apply only the linear part (no translation).
    pub fn apply_linear(&self, z: Complex64) -> Complex64 {
        self.alpha * z + self.beta * z.conj()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            alpha: self.alpha * inner.alpha + self.beta * inner.beta.conj(),
            beta: self.alpha * inner.beta + self.beta * inner.alpha.conj(),
            gamma: self.apply(inner.gamma),
        }
    }

    /// `|alpha|² - |beta|²`, the Jacobian determinant.
    pub fn determinant(&self) -> f64 {
        self.alpha.norm_sqr() - self.beta.norm_sqr()
    }

    fn is_rank_deficient(&self) -> bool {
        let (a, b) = (self.alpha.norm(), self.beta.norm());
        (a - b).abs() <= RANK_TOL * (a + b)
    }

    fn is_proper(&self) -> bool {
        self.alpha.norm() != 0.0 && self.beta.norm() != 0.0
    }

    pub fn invert(&self) -> Result<AffineMap> {
        if self.is_rank_deficient() {
            return Err(Error::NotInvertible);
        }
        let det = self.determinant();
        let alpha = self.alpha.conj() / det;
        let beta = -self.beta / det;
        let gamma = -(alpha * self.gamma + beta * self.gamma.conj());
        Ok(AffineMap { alpha, beta, gamma })
    }

    pub fn decompose(&self) -> Result<AffineDecomposition> {
        if !self.is_proper() {
            return Err(Error::NotAffine);
        }
        if self.is_rank_deficient() {
            return Err(Error::RankDeficient);
        }
        let (ma, mb) = (self.alpha.norm(), self.beta.norm());
        let a = ma + mb;
        let b = ma - mb;
        let c = 2.0 * (ma * mb).sqrt();
        let (arg_a, arg_b) = (self.alpha.arg(), self.beta.arg());
        let mut phi = (arg_a + arg_b) / 2.0;
        let mut theta = (arg_a - arg_b) / 2.0;
        // (phi, theta) and (phi + π, theta + π) describe the same map
        if phi <= -PI / 2.0 {
            phi += PI;
            theta += PI;
        } else if phi > PI / 2.0 {
            phi -= PI;
            theta -= PI;
        }
        Ok(AffineDecomposition {
            a,
            b,
            c,
            theta: normalize_angle(theta),
            phi,
            gamma: self.gamma,
        })
    }

    /// Image of the unit circle: centre γ, semi-axes `|α| ± |β|`, major axis
    /// along `(arg α + arg β)/2`.
    pub fn unit_circle_image(&self) -> Result<Ellipse> {
        if !self.is_proper() {
            return Err(Error::NotAffine);
        }
        if self.is_rank_deficient() {
            return Err(Error::SegmentImage);
        }
        let (ma, mb) = (self.alpha.norm(), self.beta.norm());
        Ellipse::new(
            self.gamma,
            ma + mb,
            (ma - mb).abs(),
            (self.alpha.arg() + self.beta.arg()) / 2.0,
        )
    }

    /// Foci of the unit circle image, `γ ± 2 sqrt(αβ)`.
    pub fn unit_circle_image_foci(&self) -> (Complex64, Complex64) {
        let offset = 2.0 * (self.alpha * self.beta).sqrt();
        (self.gamma + offset, self.gamma - offset)
    }
}

pub fn apply_affine(map: &AffineMap, z: Complex64) -> Complex64 {
    map.apply(z)
}

/// Reduce an angle to (-π, π].
pub fn normalize_angle(angle: f64) -> f64 {
    let mut a = angle % (2.0 * PI);
    if a <= -PI {
        a += 2.0 * PI;
    } else if a > PI {
        a -= 2.0 * PI;
    }
    a
}

/// Parameters of `Φ = S ∘ A ∘ R`, with `α = ½(a+b)e^{i(φ+θ)}`,
/// `β = ½(a-b)e^{i(φ-θ)}` and `c = sqrt(a² - b²)`. `b < 0` encodes an
/// orientation-reversing map (`|β| > |α|`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineDecomposition {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub theta: f64,
    pub phi: f64,
    pub gamma: Complex64,
}

impl AffineDecomposition {
    pub fn new(a: f64, b: f64, theta: f64, phi: f64, gamma: Complex64) -> Result<Self> {
        ensure_finite(gamma, "decomposition gamma")?;
        if !(a.is_finite() && b.is_finite() && theta.is_finite() && phi.is_finite()) {
            return Err(Error::NonFinite { what: "decomposition parameter" });
        }
        if !(a > b.abs() && b != 0.0) {
            return Err(Error::RankDeficient);
        }
        Ok(AffineDecomposition {
            a,
            b,
            c: ((a - b) * (a + b)).sqrt(),
            theta,
            phi,
            gamma,
        })
    }

    pub fn rotation(&self) -> AffineMap {
        AffineMap {
            alpha: Complex64::from_polar(1.0, self.theta),
            beta: c64(0.0, 0.0),
            gamma: c64(0.0, 0.0),
        }
    }

    pub fn pure_affine(&self) -> AffineMap {
        AffineMap {
            alpha: c64((self.a + self.b) / (2.0 * self.c), 0.0),
            beta: c64((self.a - self.b) / (2.0 * self.c), 0.0),
            gamma: c64(0.0, 0.0),
        }
    }

    pub fn similarity(&self) -> ConformalSimilarity {
        ConformalSimilarity {
            translation: self.gamma,
            multiplier: Complex64::from_polar(self.c, self.phi),
        }
    }

    /// `S ∘ A ∘ R` collapsed into one map.
    pub fn recompose(&self) -> AffineMap {
        self.similarity()
            .as_affine()
            .compose(&self.pure_affine().compose(&self.rotation()))
    }
}

pub fn decompose(map: &AffineMap) -> Result<AffineDecomposition> {
    map.decompose()
}

pub fn recompose(d: &AffineDecomposition) -> AffineMap {
    d.recompose()
}

pub fn invert(map: &AffineMap) -> Result<AffineMap> {
    map.invert()
}

pub fn unit_circle_image(map: &AffineMap) -> Result<Ellipse> {
    map.unit_circle_image()
}

/// `a/c cos(θ + 2kπ/n) + i b/c sin(θ + 2kπ/n)` for k = 1..n: the images of the
/// rotated n-th roots of unity under the purely affine factor.
pub fn rotated_root_images(
    n: usize,
    theta: f64,
    a_over_c: f64,
    b_over_c: f64,
) -> Result<Vec<Complex64>> {
    if n < 3 {
        return Err(Error::NeedPolygon { n });
    }
    let params = EllipseTraceParams::new(a_over_c, b_over_c, theta)?;
    Ok(params.rotated_points(n))
}
