//! Chebyshev polynomials of the first and second kind, and their behaviour on
//! the ellipses with foci ±1.
//!
//! On the ellipse `a/c cos t + i b/c sin t` (with `c² = a² - b²`) the first
//! kind polynomial has the closed form
//! `T_n = ½((a+b)/c)^n e^{int} + ½((a-b)/c)^n e^{-int}`, so it is periodic in
//! `t` with period `2π/n` and takes each of its values exactly n times there.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{c64, Polynomial};

/// `T_n(z)` by the three-term recurrence.
pub fn cheb_t(n: usize, z: Complex64) -> Complex64 {
    let (mut prev, mut cur) = (c64(1.0, 0.0), z);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_n(z)` by the three-term recurrence.
pub fn cheb_u(n: usize, z: Complex64) -> Complex64 {
    let (mut prev, mut cur) = (c64(1.0, 0.0), 2.0 * z);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn recurrence_coeffs(n: usize, first: Vec<i64>) -> Vec<i64> {
    let mut prev = vec![1i64];
    let mut cur = first;
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = vec![0i64; cur.len() + 1];
        for (k, &c) in cur.iter().enumerate() {
            next[k + 1] += 2 * c;
        }
        for (k, &c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Integer coefficients of `T_n`, ascending.
pub fn cheb_t_coeffs(n: usize) -> Vec<i64> {
    recurrence_coeffs(n, vec![0, 1])
}

/// Integer coefficients of `U_n`, ascending.
pub fn cheb_u_coeffs(n: usize) -> Vec<i64> {
    recurrence_coeffs(n, vec![0, 2])
}

fn to_polynomial(coeffs: &[i64]) -> Polynomial {
    Polynomial::new(coeffs.iter().map(|&c| c64(c as f64, 0.0)).collect())
        .expect("integer coefficients are finite")
}

pub fn cheb_t_poly(n: usize) -> Polynomial {
    to_polynomial(&cheb_t_coeffs(n))
}

pub fn cheb_u_poly(n: usize) -> Polynomial {
    to_polynomial(&cheb_u_coeffs(n))
}

/// Roots of `U_{n-1}`: `cos(kπ/n)` for k = 1..n-1, decreasing.
pub fn u_roots(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::EmptyRootSet { n });
    }
    Ok((1..n).map(|k| (k as f64 * PI / n as f64).cos()).collect())
}

/// `|T_n'(z) - n U_{n-1}(z)|`, with `T_n'` taken from the coefficient form.
pub fn derivative_identity_check(n: usize, z: Complex64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Invalid("derivative identity needs n >= 1".into()));
    }
    let derivative = cheb_t_poly(n).derivative().eval(z);
    Ok((derivative - n as f64 * cheb_u(n - 1, z)).norm())
}

/// Normalised ellipse `a/c cos t + i b/c sin t` with `(a/c)² - (b/c)² = 1`,
/// plus a starting angle `theta` for the n-fold point sets on it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipseTraceParams {
    pub a_over_c: f64,
    pub b_over_c: f64,
    pub theta: f64,
}

const NORMALIZATION_TOL: f64 = 1e-12;

impl EllipseTraceParams {
    pub fn new(a_over_c: f64, b_over_c: f64, theta: f64) -> Result<Self> {
        if !(a_over_c.is_finite() && b_over_c.is_finite() && theta.is_finite()) {
            return Err(Error::NonFinite { what: "ellipse trace parameters" });
        }
        let defect = a_over_c * a_over_c - b_over_c * b_over_c - 1.0;
        if a_over_c <= 1.0 || b_over_c <= 0.0 || defect.abs() > NORMALIZATION_TOL * a_over_c * a_over_c {
            return Err(Error::NotOnConfocalEllipse);
        }
        Ok(EllipseTraceParams { a_over_c, b_over_c, theta })
    }

    /// Normalise semi-axes `a > b > 0` by `c = sqrt(a² - b²)`.
    pub fn from_axes(a: f64, b: f64, theta: f64) -> Result<Self> {
        if !(a > b && b > 0.0) {
            return Err(Error::NotOnConfocalEllipse);
        }
        let c = ((a - b) * (a + b)).sqrt();
        Self::new(a / c, b / c, theta)
    }

    /// Member `s` of the confocal family, `cosh s cos t + i sinh s sin t`.
    pub fn from_confocal(s: f64, theta: f64) -> Result<Self> {
        if s.is_nan() || s <= 0.0 {
            return Err(Error::DegenerateSegment { s });
        }
        Self::new(s.cosh(), s.sinh(), theta)
    }

    pub fn point(&self, t: f64) -> Complex64 {
        c64(self.a_over_c * t.cos(), self.b_over_c * t.sin())
    }

    /// The n points at angles `theta + 2kπ/n`, k = 1..n.
    pub fn rotated_points(&self, n: usize) -> Vec<Complex64> {
        (1..=n)
            .map(|k| self.point(self.theta + 2.0 * PI * k as f64 / n as f64))
            .collect()
    }
}

/// `T_n` on the normalised ellipse at angle `t`, from the closed form.
pub fn cheb_on_ellipse(n: usize, params: &EllipseTraceParams, t: f64) -> Complex64 {
    let outer = params.a_over_c + params.b_over_c;
    let inner = params.a_over_c - params.b_over_c;
    let phase = Complex64::from_polar(1.0, n as f64 * t);
    let nf = n as f64;
    let (big, small) = if nf * outer.ln() > 300.0 {
        // log-magnitude form; the decaying term underflows harmlessly
        ((nf * outer.ln() - 2f64.ln()).exp(), (nf * inner.ln() - 2f64.ln()).exp())
    } else {
        (0.5 * outer.powi(n as i32), 0.5 * inner.powi(n as i32))
    };
    big * phase + small * phase.conj()
}

/// Residual of `sqrt(z² - 1) = ±(b cos t + i a sin t)` for
/// `z = a cos t + i b sin t` with `a² - b² = 1`, minimised over the sign.
pub fn connection_identity(a: f64, b: f64, t: f64) -> Result<f64> {
    if !(a > b && b > 0.0) || (a * a - b * b - 1.0).abs() > NORMALIZATION_TOL * a * a {
        return Err(Error::NotOnConfocalEllipse);
    }
    let z = c64(a * t.cos(), b * t.sin());
    let root = (z * z - 1.0).sqrt();
    let claimed = c64(b * t.cos(), a * t.sin());
    Ok((root - claimed).norm().min((root + claimed).norm()))
}
