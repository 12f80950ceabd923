//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use bocher_grace::affine::ConformalSimilarity;
use bocher_grace::numeric::c64;
use bocher_grace::regularity::{detect_affinely_regular, Polygon};
use num_complex::Complex64;
use rand::Rng;

pub fn in_unit_disk<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI))
}

/// `count` points in the unit disk, pairwise at least `separation` apart.
pub fn separated_points<R: Rng>(rng: &mut R, count: usize, separation: f64) -> Vec<Complex64> {
    let mut points: Vec<Complex64> = Vec::with_capacity(count);
    while points.len() < count {
        let z = in_unit_disk(rng);
        if points.iter().all(|p| (p - z).norm() >= separation) {
            points.push(z);
        }
    }
    points
}

/// Multiplier modulus in [0.2, 5], translation within the multiplier's
/// modulus.
pub fn random_similarity<R: Rng>(rng: &mut R) -> ConformalSimilarity {
    let modulus = rng.gen_range(0.2..5.0);
    let multiplier = Complex64::from_polar(modulus, rng.gen_range(-PI..PI));
    let translation = in_unit_disk(rng) * modulus;
    ConformalSimilarity::new(translation, multiplier).unwrap()
}

/// Foci of the Steiner inellipse of a triangle: the centroid plus or minus
/// a third of the square root of `Σ z_i² - Σ z_i z_j`.
pub fn steiner_foci(z: [Complex64; 3]) -> (Complex64, Complex64) {
    let center = (z[0] + z[1] + z[2]) / 3.0;
    let disc = z[0] * z[0] + z[1] * z[1] + z[2] * z[2] - z[0] * z[1] - z[1] * z[2] - z[2] * z[0];
    let offset = disc.sqrt() / 3.0;
    (center + offset, center - offset)
}

pub fn max_pairwise_distance(points: &[Complex64]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            d = d.max((a - b).norm());
        }
    }
    d
}

/// Opposite sides equal as vectors, within `tol` times the largest pairwise
/// vertex distance.
pub fn is_parallelogram(q: &[Complex64; 4], tol: f64) -> bool {
    let scale = max_pairwise_distance(q);
    ((q[1] - q[0]) - (q[2] - q[3])).norm() <= tol * scale && ((q[2] - q[1]) - (q[3] - q[0])).norm() <= tol * scale
}

/// Convex polygon with vertices at sorted random angles on a unit circle,
/// radii jittered by up to `jitter`, then sent through a random affine map.
/// Retries until the result is strictly convex.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, n: usize, jitter: f64) -> Polygon {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        let a = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(-PI..PI));
        let b = a * rng.gen_range(0.0..0.7) * Complex64::from_polar(1.0, rng.gen_range(-PI..PI));
        let g = c64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let vertices: Vec<Complex64> = angles
            .iter()
            .map(|&t| {
                let w = Complex64::from_polar(1.0 - jitter * rng.gen::<f64>(), t);
                a * w + b * w.conj() + g
            })
            .collect();
        if let Ok(p) = Polygon::new(vertices) {
            let p = if p.is_convex_ccw() { p } else { reversed(&p) };
            if p.is_convex_ccw() {
                return p;
            }
        }
    }
}

pub fn reversed(p: &Polygon) -> Polygon {
    let mut v = p.vertices().to_vec();
    v.reverse();
    Polygon::new(v).unwrap()
}

/// Random convex polygon whose Fourier residual is at least `min_relative`
/// of its scale.
pub fn irregular_convex_polygon<R: Rng>(rng: &mut R, n: usize, min_relative: f64) -> Polygon {
    loop {
        let jitter = if rng.gen_bool(0.5) { 0.0 } else { 0.15 };
        let p = random_convex_polygon(rng, n, jitter);
        let fit = detect_affinely_regular(&p, 1e-6).unwrap().fit;
        if fit.residual >= min_relative * fit.scale {
            return p;
        }
    }
}

/// `α ω^k + β ω^{-k} + γ + ε e^{iφ} ω^{mk}` for one extra mode `m`.
pub fn mode_perturbed(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    m: usize,
    epsilon: Complex64,
) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let w = |j: f64| Complex64::from_polar(1.0, 2.0 * PI * j * k as f64 / n as f64);
            alpha * w(1.0) + beta * w(-1.0) + gamma + epsilon * w(m as f64)
        })
        .collect()
}
