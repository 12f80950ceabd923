//! Ellipses in the complex plane, the confocal family with foci ±1, point
//! membership and tangency of segments.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::affine::{AffineMap, ConformalSimilarity};
use crate::error::{Error, Result};
use crate::numeric::{c64, ensure_finite};

/// Centre, semi-axes and the direction of the major axis, in (-π/2, π/2].
/// Circles carry rotation 0.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ellipse {
    pub center: Complex64,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub rotation: f64,
}

fn canonical_rotation(angle: f64) -> f64 {
    let mut r = angle % PI;
    if r <= -PI / 2.0 {
        r += PI;
    } else if r > PI / 2.0 {
        r -= PI;
    }
    r
}

impl Ellipse {
    /// Builds an ellipse from two semi-axes in either order; the first is laid
    /// along `rotation`.
    pub fn new(center: Complex64, axis: f64, other_axis: f64, rotation: f64) -> Result<Self> {
        ensure_finite(center, "ellipse center")?;
        if !(axis.is_finite() && other_axis.is_finite() && rotation.is_finite()) {
            return Err(Error::NonFinite { what: "ellipse parameter" });
        }
        if axis < 0.0 || other_axis < 0.0 {
            return Err(Error::InvalidEllipse("negative semi-axis"));
        }
        let (semi_major, semi_minor, rotation) = if axis >= other_axis {
            (axis, other_axis, rotation)
        } else {
            (other_axis, axis, rotation + PI / 2.0)
        };
        if semi_major <= 0.0 {
            return Err(Error::InvalidEllipse("zero semi-major axis"));
        }
        let rotation = if semi_major == semi_minor { 0.0 } else { canonical_rotation(rotation) };
        Ok(Ellipse { center, semi_major, semi_minor, rotation })
    }

    pub fn circle(center: Complex64, radius: f64) -> Result<Self> {
        Self::new(center, radius, radius, 0.0)
    }

    pub fn focal_half_distance(&self) -> f64 {
        ((self.semi_major - self.semi_minor) * (self.semi_major + self.semi_minor)).sqrt()
    }

    pub fn eccentricity(&self) -> f64 {
        self.focal_half_distance() / self.semi_major
    }

    pub fn is_circle(&self) -> bool {
        self.semi_major == self.semi_minor
    }

    /// `center ± f e^{i rotation}`; both equal the centre for a circle.
    pub fn foci(&self) -> (Complex64, Complex64) {
        let offset = Complex64::from_polar(self.focal_half_distance(), self.rotation);
        (self.center + offset, self.center - offset)
    }

    /// Point at parameter `t`: `center + e^{i rotation}(A cos t + i B sin t)`.
    pub fn point(&self, t: f64) -> Complex64 {
        self.center
            + Complex64::from_polar(1.0, self.rotation)
                * c64(self.semi_major * t.cos(), self.semi_minor * t.sin())
    }

    /// `samples` points evenly spaced in the parameter.
    pub fn trace(&self, samples: usize) -> Vec<Complex64> {
        (0..samples)
            .map(|k| self.point(2.0 * PI * k as f64 / samples as f64))
            .collect()
    }

    /// Coordinates of `z` in the axis frame.
    fn axis_frame(&self, z: Complex64) -> Complex64 {
        (z - self.center) * Complex64::from_polar(1.0, -self.rotation)
    }

    /// `(x/A)² + (y/B)²` in the axis frame; 1 on the ellipse.
    pub fn quadratic_form(&self, z: Complex64) -> f64 {
        let w = self.axis_frame(z);
        (w.re / self.semi_major).powi(2) + (w.im / self.semi_minor).powi(2)
    }

    pub fn contains_point(&self, z: Complex64, tol: f64) -> bool {
        if self.semi_minor == 0.0 {
            // segment [-A, A] along the axis
            let w = self.axis_frame(z);
            return w.im.abs() <= tol * self.semi_major
                && (w.re.abs() - self.semi_major).abs() <= tol * self.semi_major;
        }
        (self.quadratic_form(z) - 1.0).abs() <= tol
    }

    /// Classify the line through `p` and `q` against the ellipse.
    ///
    /// In coordinates where the ellipse is the unit circle, the line's
    /// distance `h` from the origin decides everything; the normalised
    /// discriminant of the intersection quadratic is `1 - h²`. The reported
    /// point is the foot of that perpendicular (the double root when tangent),
    /// and `param` locates it on the segment (0 at `p`, 1 at `q`).
    pub fn segment_tangency(&self, p: Complex64, q: Complex64, tol: f64) -> Result<SegmentTangency> {
        if p == q {
            return Err(Error::CoincidentEndpoints);
        }
        if self.semi_minor == 0.0 {
            return Err(Error::DegenerateEllipse);
        }
        let normalize = |z: Complex64| {
            let w = self.axis_frame(z);
            c64(w.re / self.semi_major, w.im / self.semi_minor)
        };
        let start = normalize(p);
        let dir = normalize(q) - start;
        let param = -(start * dir.conj()).re / dir.norm_sqr();
        let foot = start + dir * param;
        let discriminant = 1.0 - foot.norm_sqr();
        let kind = if discriminant.abs() <= tol {
            TangencyKind::Tangent
        } else if discriminant > 0.0 {
            TangencyKind::Secant
        } else {
            TangencyKind::Disjoint
        };
        Ok(SegmentTangency {
            kind,
            discriminant,
            param,
            point: p + (q - p) * param,
        })
    }

    /// An affine map sending this ellipse onto the unit circle, or a
    /// similarity when the ellipse is a circle.
    pub fn map_to_unit_circle(&self) -> Result<UnitCircleMap> {
        if self.semi_minor == 0.0 {
            return Err(Error::DegenerateEllipse);
        }
        let turn = Complex64::from_polar(1.0, self.rotation);
        if self.semi_major - self.semi_minor <= 1e-12 * self.semi_major {
            let radius = (self.semi_major + self.semi_minor) / 2.0;
            let s = ConformalSimilarity::new(self.center, turn * radius)?;
            return Ok(UnitCircleMap::Similarity(s.inverse()));
        }
        let onto = AffineMap::new(
            turn * ((self.semi_major + self.semi_minor) / 2.0),
            turn * ((self.semi_major - self.semi_minor) / 2.0),
            self.center,
        )?;
        Ok(UnitCircleMap::Affine(onto.invert()?))
    }
}

pub fn foci(e: &Ellipse) -> (Complex64, Complex64) {
    e.foci()
}

pub fn contains_point(e: &Ellipse, z: Complex64, tol: f64) -> bool {
    e.contains_point(z, tol)
}

pub fn segment_tangency(e: &Ellipse, p: Complex64, q: Complex64, tol: f64) -> Result<SegmentTangency> {
    e.segment_tangency(p, q, tol)
}

pub fn map_to_unit_circle(e: &Ellipse) -> Result<UnitCircleMap> {
    e.map_to_unit_circle()
}

/// Distance between two unordered pairs of points.
pub fn pair_distance(a: (Complex64, Complex64), b: (Complex64, Complex64)) -> f64 {
    let straight = (a.0 - b.0).norm().max((a.1 - b.1).norm());
    let crossed = (a.0 - b.1).norm().max((a.1 - b.0).norm());
    straight.min(crossed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TangencyKind {
    Tangent,
    Secant,
    Disjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentTangency {
    pub kind: TangencyKind,
    /// `1 - h²`, dimensionless.
    pub discriminant: f64,
    pub param: f64,
    pub point: Complex64,
}

impl SegmentTangency {
    pub fn tangent_at(&self) -> Option<Complex64> {
        (self.kind == TangencyKind::Tangent).then_some(self.point)
    }

    pub fn within_segment(&self, slack: f64) -> bool {
        self.param >= -slack && self.param <= 1.0 + slack
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum UnitCircleMap {
    Affine(AffineMap),
    Similarity(ConformalSimilarity),
}

impl UnitCircleMap {
    pub fn apply(&self, z: Complex64) -> Complex64 {
        match self {
            UnitCircleMap::Affine(m) => m.apply(z),
            UnitCircleMap::Similarity(s) => s.apply(z),
        }
    }

    pub fn as_affine(&self) -> AffineMap {
        match self {
            UnitCircleMap::Affine(m) => *m,
            UnitCircleMap::Similarity(s) => s.as_affine(),
        }
    }
}

/// Parameter `s > 0` of the confocal ellipse `cosh s cos t + i sinh s sin t`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ConfocalParameter(f64);

impl ConfocalParameter {
    pub fn new(s: f64) -> Result<Self> {
        if s > 0.0 && s.is_finite() {
            Ok(ConfocalParameter(s))
        } else {
            Err(Error::DegenerateSegment { s })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn ellipse(self) -> Ellipse {
        Ellipse {
            center: c64(0.0, 0.0),
            semi_major: self.0.cosh(),
            semi_minor: self.0.sinh(),
            rotation: 0.0,
        }
    }

    pub fn point(self, t: f64) -> Complex64 {
        c64(self.0.cosh() * t.cos(), self.0.sinh() * t.sin())
    }
}

impl TryFrom<f64> for ConfocalParameter {
    type Error = Error;

    fn try_from(s: f64) -> Result<Self> {
        ConfocalParameter::new(s)
    }
}

impl From<ConfocalParameter> for f64 {
    fn from(s: ConfocalParameter) -> f64 {
        s.0
    }
}

/// Member `s` of the family with foci ±1.
pub fn confocal_member(s: f64) -> Result<Ellipse> {
    Ok(ConfocalParameter::new(s)?.ellipse())
}

/// The `s` whose confocal ellipse passes through `z`, from
/// `cosh s = (|z-1| + |z+1|)/2`.
pub fn confocal_through_point(z: Complex64) -> Result<ConfocalParameter> {
    ensure_finite(z, "point")?;
    let distance_to_segment = if z.re.abs() <= 1.0 {
        z.im.abs()
    } else {
        (c64(z.re.abs(), z.im) - 1.0).norm()
    };
    if distance_to_segment <= 1e-9 {
        return Err(Error::DegenerateConfocal);
    }
    let cosh_s = ((z - 1.0).norm() + (z + 1.0).norm()) / 2.0;
    ConfocalParameter::new(cosh_s.acosh())
}
