//! Simultaneous root finding (Aberth-Ehrlich iteration) with Newton polishing
//! and multiplicity clustering.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{c64, PointMultiset, Polynomial};
use crate::error::{Error, Result};

/// Tolerances of the root finder.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootConfig {
    /// Accepted backward error: `|p(r)| <= tol_root * sum |a_k| |r|^k`.
    pub tol_root: f64,
    /// Roots closer than `tol_cluster * bound` are always merged.
    pub tol_cluster: f64,
    pub max_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            tol_root: 1e-10,
            tol_cluster: 1e-7,
            max_iterations: 200,
        }
    }
}

// A root is frozen once its residual is within this many ulps of the
// evaluation noise.
const FREEZE_ULPS: f64 = 8.0;

pub(super) fn find_roots_with(p: &Polynomial, config: &RootConfig) -> Result<PointMultiset> {
    find_roots_at_scale(p, config, 0.0)
}

/// Root finding where `scale` is a length below which the problem's
/// coefficients carry no information. Noise estimates at a point `z` use
/// `max(|z|, scale)` in place of `|z|`. The derivative of a polynomial whose
/// roots are spread over a disc of radius R needs this: its lower
/// coefficients can be pure rounding noise, and measured against themselves
/// they would make every cluster look significant.
pub(super) fn find_roots_at_scale(p: &Polynomial, config: &RootConfig, scale: f64) -> Result<PointMultiset> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if p.degree() == 0 {
        return Err(Error::NoRootsOfConstant);
    }

    // exact zero roots
    let zeros = p.coeffs().iter().take_while(|c| c.norm() == 0.0).count();
    let lead = p.leading();
    let monic = Polynomial {
        coeffs: p.coeffs()[zeros..].iter().map(|&c| c / lead).collect(),
    };

    let mut roots = vec![c64(0.0, 0.0); zeros];
    match monic.degree() {
        0 => {}
        1 => roots.push(-monic.coeffs[0]),
        _ => {
            let mut found = aberth(&monic, config.max_iterations);
            polish(&monic, &mut found);
            cluster(&monic, &mut found, config.tol_cluster, scale);
            roots.extend(found);
        }
    }

    for &r in &roots {
        let value = p.eval(r);
        let bound = noise_bound(p, r, scale);
        if value.norm() > config.tol_root * bound.max(f64::MIN_POSITIVE) {
            return Err(Error::Invalid(format!(
                "root finder did not converge within {} iterations (|p({r})| = {:.3e})",
                config.max_iterations,
                value.norm()
            )));
        }
    }
    Ok(PointMultiset { points: roots })
}

/// Radius `2 * max_k |a_k / a_n|^(1/(n-k))`, an upper bound on root moduli.
fn root_bound(coeffs: &[Complex64]) -> f64 {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].norm();
    let radius = (0..n)
        .map(|k| (coeffs[k].norm() / lead).powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max);
    2.0 * radius
}

fn aberth(p: &Polynomial, max_iterations: usize) -> Vec<Complex64> {
    let n = p.degree();
    let dp = p.derivative();

    // start on a circle around the root centroid, sized from the shifted
    // coefficients
    let center = -p.coeffs[n - 1] / n as f64;
    let shifted = p.taylor_shift(center);
    let radius = root_bound(&shifted) / 2.0;
    if radius == 0.0 {
        return vec![center; n];
    }
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * PI * k as f64 / n as f64 + 0.4;
            center + Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut frozen = vec![false; n];
    for _ in 0..max_iterations {
        let mut active = false;
        for j in 0..n {
            if frozen[j] {
                continue;
            }
            let (value, bound) = p.eval_with_bound(z[j]);
            if value.norm() <= FREEZE_ULPS * f64::EPSILON * bound {
                frozen[j] = true;
                continue;
            }
            active = true;
            let slope = dp.eval(z[j]);
            let newton = value / slope;
            let repulsion: Complex64 = (0..n)
                .filter(|&k| k != j)
                .map(|k| {
                    let d = z[j] - z[k];
                    if d.norm() == 0.0 {
                        c64(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = newton / (c64(1.0, 0.0) - newton * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[j] -= step;
            } else {
                // stationary point of p: nudge off it
                z[j] += Complex64::from_polar(radius * 1e-3, 0.3 + j as f64);
            }
        }
        if !active {
            break;
        }
    }
    z
}

/// A few Newton steps per root, each kept only if it lowers |p|.
fn polish(p: &Polynomial, roots: &mut [Complex64]) {
    let dp = p.derivative();
    for r in roots.iter_mut() {
        let mut residual = p.eval(*r).norm();
        for _ in 0..3 {
            if residual == 0.0 {
                break;
            }
            let slope = dp.eval(*r);
            if slope.norm() == 0.0 {
                break;
            }
            let candidate = *r - p.eval(*r) / slope;
            let candidate_residual = p.eval(candidate).norm();
            if candidate_residual < residual {
                *r = candidate;
                residual = candidate_residual;
            } else {
                break;
            }
        }
    }
}

struct Cluster {
    sum: Complex64,
    count: usize,
}

impl Cluster {
    fn centroid(&self) -> Complex64 {
        self.sum / self.count as f64
    }
}

/// Merge approximations of a multiple root. Two groups are merged when they
/// are closer than `tol_cluster * bound`, or when the merged group's radius is
/// explained by rounding noise for a root of that multiplicity:
/// `|t_m| * radius^m <= K * eps * sum |a_k| |c|^k`, with `t_m` the m-th Taylor
/// coefficient at the centroid `c`. Each merged group is replaced by the
/// m-fold root of `p`, located by Newton on `p^(m-1)`.
fn cluster(p: &Polynomial, roots: &mut Vec<Complex64>, tol_cluster: f64, scale: f64) {
    let bound = root_bound(&p.coeffs)
        .max(roots.iter().map(|r| r.norm()).fold(0.0, f64::max))
        .max(scale);
    let hard_radius = tol_cluster * bound;
    // Farthest apart two members of a noise-explained cluster may be; anything
    // wider is treated as distinct roots without further tests.
    let candidate_radius = 1e-2 * bound;

    let mut clusters: Vec<(Cluster, Vec<Complex64>)> = roots
        .iter()
        .map(|&r| (Cluster { sum: r, count: 1 }, vec![r]))
        .collect();
    let mut rejected: Vec<(Vec<Complex64>, Vec<Complex64>)> = Vec::new();

    loop {
        let mut best: Option<(usize, usize, f64)> = None;
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let d = (clusters[i].0.centroid() - clusters[j].0.centroid()).norm();
                if d > candidate_radius {
                    continue;
                }
                if rejected
                    .iter()
                    .any(|(a, b)| {
                        (a == &clusters[i].1 && b == &clusters[j].1)
                            || (a == &clusters[j].1 && b == &clusters[i].1)
                    })
                {
                    continue;
                }
                if best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((i, j, d));
                }
            }
        }
        let Some((i, j, d)) = best else { break };

        let merged_sum = clusters[i].0.sum + clusters[j].0.sum;
        let merged_count = clusters[i].0.count + clusters[j].0.count;
        let centroid = merged_sum / merged_count as f64;
        let members: Vec<Complex64> = clusters[i].1.iter().chain(&clusters[j].1).copied().collect();

        let accept = d <= hard_radius || noise_explained(p, centroid, &members, scale);
        if accept {
            let (cj, mj) = clusters.swap_remove(j);
            let (ci, mi) = &mut clusters[i];
            ci.sum += cj.sum;
            ci.count += cj.count;
            mi.extend(mj);
        } else {
            rejected.push((clusters[i].1.clone(), clusters[j].1.clone()));
        }
    }

    let mut out = Vec::with_capacity(roots.len());
    for (c, members) in clusters {
        if c.count == 1 {
            out.push(members[0]);
        } else {
            let root = refine_multiple(p, c.centroid(), c.count);
            out.extend(std::iter::repeat_n(root, c.count));
        }
    }
    *roots = out;
}

/// `sum |a_k| max(|z|, scale)^k`.
fn noise_bound(p: &Polynomial, z: Complex64, scale: f64) -> f64 {
    let r = z.norm().max(scale);
    p.coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
}

fn noise_explained(p: &Polynomial, centroid: Complex64, members: &[Complex64], scale: f64) -> bool {
    let m = members.len();
    let radius = members
        .iter()
        .map(|z| (z - centroid).norm())
        .fold(0.0, f64::max);
    let taylor = p.taylor_shift(centroid);
    let noise = noise_bound(p, centroid, scale);
    let k = FREEZE_ULPS * 4f64.powi(m as i32);
    taylor[m].norm() * radius.powi(m as i32) <= k * f64::EPSILON * noise
}

/// Newton iteration on `p^(m-1)`, whose simple root is the m-fold root of p.
fn refine_multiple(p: &Polynomial, start: Complex64, m: usize) -> Complex64 {
    let mut q = p.clone();
    for _ in 0..m - 1 {
        q = q.derivative();
    }
    let dq = q.derivative();
    let mut z = start;
    let mut residual = q.eval(z).norm();
    for _ in 0..8 {
        let slope = dq.eval(z);
        if residual == 0.0 || slope.norm() == 0.0 {
            break;
        }
        let candidate = z - q.eval(z) / slope;
        let r = q.eval(candidate).norm();
        if r < residual {
            z = candidate;
            residual = r;
        } else {
            break;
        }
    }
    z
}
