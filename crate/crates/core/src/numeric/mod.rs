//! Complex polynomial arithmetic, evaluation and root finding.
//!
//! Coefficients are stored in ascending degree order: `coeffs[k]` multiplies
//! `z^k`.

mod pairing;
mod roots;

use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use pairing::min_cost_assignment;
pub use roots::RootConfig;

/// Shorthand for `Complex64::new`.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn ensure_finite(z: Complex64, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}

/// A polynomial with complex coefficients. Trailing (highest degree) zeros are
/// trimmed on construction, so the leading coefficient is nonzero unless the
/// polynomial is identically zero, which is stored as the single coefficient 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self> {
        for c in &coeffs {
            ensure_finite(*c, "polynomial coefficient")?;
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == Complex64::new(0.0, 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| c64(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![c64(0.0, 0.0)] }
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// The monic polynomial `prod (z - r)` over `roots`. An empty slice gives
    /// the constant 1.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(c64(1.0, 0.0));
        for &r in roots {
            // multiply by (z - r)
            coeffs.push(c64(0.0, 0.0));
            for k in (0..coeffs.len()).rev() {
                let lower = if k > 0 { coeffs[k - 1] } else { c64(0.0, 0.0) };
                coeffs[k] = lower - r * coeffs[k];
            }
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == c64(0.0, 0.0)
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(c64(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value at `z` together with `sum |a_k| |z|^k`, the magnitude against
    /// which rounding noise in the value is measured.
    pub fn eval_with_bound(&self, z: Complex64) -> (Complex64, f64) {
        let r = z.norm();
        let mut value = c64(0.0, 0.0);
        let mut bound = 0.0;
        for &c in self.coeffs.iter().rev() {
            value = value * z + c;
            bound = bound * r + c.norm();
        }
        (value, bound)
    }

    /// Coefficient k of the result is `(k+1) * a_{k+1}`. Constants map to the
    /// zero polynomial.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Polynomial { coeffs }
    }

    /// Coefficients of `h -> p(center + h)`, i.e. the Taylor coefficients
    /// `p^(j)(center) / j!`.
    pub fn taylor_shift(&self, center: Complex64) -> Vec<Complex64> {
        let mut t = self.coeffs.clone();
        let n = t.len();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let upper = t[k + 1];
                t[k] += center * upper;
            }
        }
        t
    }

    pub fn scale(&self, factor: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| c * factor).collect())
            .expect("scaling finite coefficients by a finite factor")
    }
}

impl TryFrom<Vec<Complex64>> for Polynomial {
    type Error = Error;

    fn try_from(coeffs: Vec<Complex64>) -> Result<Self> {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Complex64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                self.coeffs.get(k).copied().unwrap_or_default()
                    + rhs.coeffs.get(k).copied().unwrap_or_default()
            })
            .collect();
        Polynomial::new(coeffs).expect("sum of finite polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(c64(-1.0, 0.0))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![c64(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs).expect("product of finite polynomials")
    }
}

/// An unordered collection of points, repeated according to multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointMultiset {
    points: Vec<Complex64>,
}

impl PointMultiset {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        for p in &points {
            ensure_finite(*p, "point")?;
        }
        Ok(PointMultiset { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Complex64> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distinct values with their multiplicities. Clustered roots are stored
    /// as exact repeats, so grouping is by exact equality.
    pub fn with_multiplicity(&self) -> Vec<(Complex64, usize)> {
        let mut groups: Vec<(Complex64, usize)> = Vec::new();
        for &p in &self.points {
            match groups.iter_mut().find(|(q, _)| *q == p) {
                Some((_, m)) => *m += 1,
                None => groups.push((p, 1)),
            }
        }
        groups
    }

    pub fn max_multiplicity(&self) -> usize {
        self.with_multiplicity()
            .iter()
            .map(|&(_, m)| m)
            .max()
            .unwrap_or(0)
    }

    /// Largest pairwise distance.
    pub fn spread(&self) -> f64 {
        let mut spread: f64 = 0.0;
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                spread = spread.max((a - b).norm());
            }
        }
        spread
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> PointMultiset {
        PointMultiset {
            points: self.points.iter().map(|&p| f(p)).collect(),
        }
    }

    /// Largest distance between paired points under the pairing that
    /// minimises the total squared distance. Infinite when the sizes differ.
    pub fn pairing_distance(&self, other: &PointMultiset) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        if self.is_empty() {
            return 0.0;
        }
        let cost: Vec<Vec<f64>> = self
            .points
            .iter()
            .map(|a| other.points.iter().map(|b| (a - b).norm_sqr()).collect())
            .collect();
        let assignment = min_cost_assignment(&cost);
        assignment
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.points[i] - other.points[j]).norm())
            .fold(0.0, f64::max)
    }
}

impl From<Vec<Complex64>> for PointMultiset {
    fn from(points: Vec<Complex64>) -> Self {
        PointMultiset { points }
    }
}

/// Monic polynomial with the given roots.
pub fn poly_from_roots(roots: &PointMultiset) -> Polynomial {
    Polynomial::from_roots(roots.points())
}

/// Roots of `p` with the default configuration.
pub fn find_roots(p: &Polynomial) -> Result<PointMultiset> {
    roots::find_roots_with(p, &RootConfig::default())
}

pub fn find_roots_with(p: &Polynomial, config: &RootConfig) -> Result<PointMultiset> {
    roots::find_roots_with(p, config)
}

/// Roots of `p'`; there are `degree - 1` of them counted with multiplicity.
pub fn critical_points(p: &Polynomial) -> Result<PointMultiset> {
    critical_points_with(p, &RootConfig::default())
}

pub fn critical_points_with(p: &Polynomial, config: &RootConfig) -> Result<PointMultiset> {
    if p.degree() < 2 {
        return Err(Error::NoCriticalPoints { degree: p.degree() });
    }
    // geometric mean of the root moduli of p; never above the largest one
    let scale = (p.coeffs()[0].norm() / p.leading().norm()).powf(1.0 / p.degree() as f64);
    roots::find_roots_at_scale(&p.derivative(), config, scale)
}
