//! Densities of ν_m on the real line.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::quadrature::{integrate, DEFAULT_MAX_SUBDIVISIONS};
use super::support::endpoint_f64;
use super::{gm, ComplexPoint, TransformError};

/// Residual above which a Stieltjes limit is flagged as not converged.
pub const DEFAULT_LADDER_TOLERANCE: f64 = 1e-6;

/// Below this distance to a branch point the limit is taken in √y.
const BRANCH_POINT_RADIUS: f64 = 1e-13;

/// Heights y at which Im G_m(x+iy) is sampled before extrapolating to y = 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YLadder {
    ys: Vec<f64>,
    /// Extrapolate in √y instead of y, for points sitting on a branch point
    /// where Im G_m has a √y term.
    sqrt_scale: bool,
    tolerance: f64,
}

impl Default for YLadder {
    fn default() -> Self {
        Self { ys: vec![1e-2, 1e-3, 1e-4], sqrt_scale: false, tolerance: DEFAULT_LADDER_TOLERANCE }
    }
}

impl YLadder {
    pub fn new(ys: Vec<f64>) -> Result<Self, TransformError> {
        let ok = ys.len() >= 2 && ys.iter().all(|&y| y > 0.0 && y.is_finite()) && ys.windows(2).all(|w| w[0] > w[1]);
        if !ok {
            return Err(TransformError::BadLadder);
        }
        Ok(Self { ys, ..Self::default() })
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    /// A ladder scaled to the distance d from x to the nearest branch point
    /// ±a_j, j ≤ m: heights d/10, d/100, d/1000 capped at the default ladder,
    /// or a √y ladder when x is a branch point.
    pub fn adapted(m: usize, x: f64) -> Self {
        let d = branch_points(m).iter().map(|a| (x.abs() - a).abs()).fold(f64::INFINITY, f64::min);
        if d < BRANCH_POINT_RADIUS {
            return Self { ys: vec![1e-6, 1e-8, 1e-10, 1e-12], sqrt_scale: true, ..Self::default() };
        }
        let top = (d / 10.0).min(1e-2);
        Self { ys: vec![top, top / 10.0, top / 100.0], ..Self::default() }
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

/// a_1, ..., a_m in floating point.
fn branch_points(m: usize) -> Vec<f64> {
    let mut a = vec![2.0f64];
    while a.len() < m {
        let last = *a.last().unwrap();
        a.push(last + 1.0 / last);
    }
    a
}

/// Neville's scheme evaluated at t = 0. Returns the estimate from all points
/// and the one obtained after dropping the first (coarsest) point.
fn extrapolate_to_zero(ts: &[f64], values: &[f64]) -> (f64, f64) {
    let n = ts.len();
    let mut p = values.to_vec();
    let mut finer = values[n - 1];
    for level in 1..n {
        for i in 0..n - level {
            let j = i + level;
            p[i] = (ts[i] * p[i + 1] - ts[j] * p[i]) / (ts[i] - ts[j]);
        }
        if level == n - 2 {
            finer = p[1];
        }
    }
    if n == 2 {
        finer = values[1];
    }
    (p[0], finer)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityEstimate {
    pub x: f64,
    /// Extrapolated density, clamped at 0.
    pub value: f64,
    /// Gap between the full extrapolation and the one without the coarsest
    /// rung.
    pub residual: f64,
    pub converged: bool,
}

/// g_m(x) = −(1/π) lim_{y→0⁺} Im G_m(x + iy), extrapolated from the ladder.
pub fn density_numeric(m: usize, x: f64, ladder: &YLadder) -> Result<DensityEstimate, TransformError> {
    if m == 0 {
        return Err(TransformError::ZeroPower);
    }
    let mut values = Vec::with_capacity(ladder.ys.len());
    for &y in &ladder.ys {
        values.push(-gm(ComplexPoint::new(x, y), m)?.im / PI);
    }
    let ts: Vec<f64> = if ladder.sqrt_scale { ladder.ys.iter().map(|y| y.sqrt()).collect() } else { ladder.ys.clone() };
    let (full, finer) = extrapolate_to_zero(&ts, &values);
    let residual = (full - finer).abs();
    Ok(DensityEstimate { x, value: full.max(0.0), residual, converged: residual <= ladder.tolerance })
}

/// Closed-form density of ν_2, supported on [−5/2, 5/2].
pub fn density_m2_closed(x: f64) -> f64 {
    let t = x.abs();
    let numerator = if t <= 2.0 {
        ((100.0 - 16.0 * t * t).sqrt() - t * t + 10.0).sqrt() - (4.0 - t * t).sqrt()
    } else if t <= 2.5 {
        (-2.0 * t * t - 2.0 * t * (t * t - 4.0).sqrt() + 20.0).max(0.0).sqrt()
    } else {
        0.0
    };
    numerator.max(0.0) / (4.0 * PI)
}

/// √(4 − x²)/(2π) on [−2, 2].
pub fn semicircle_density(x: f64) -> f64 {
    (4.0 - x * x).max(0.0).sqrt() / (2.0 * PI)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensitySample {
    pub x: f64,
    pub g: f64,
    pub residual: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityCurve {
    pub m: usize,
    pub samples: Vec<DensitySample>,
}

impl DensityCurve {
    pub fn unconverged(&self) -> impl Iterator<Item = &DensitySample> {
        self.samples.iter().filter(|s| !s.converged)
    }
}

/// g_m on `samples` equally spaced points of [x_min, x_max], each with an
/// adapted ladder. Points are evaluated in parallel.
pub fn density_curve(m: usize, x_min: f64, x_max: f64, samples: usize) -> Result<DensityCurve, TransformError> {
    if m == 0 {
        return Err(TransformError::ZeroPower);
    }
    if samples == 0 || !x_min.is_finite() || !x_max.is_finite() || x_min > x_max || (samples > 1 && x_min == x_max) {
        return Err(TransformError::BadGrid);
    }
    let step = if samples > 1 { (x_max - x_min) / (samples - 1) as f64 } else { 0.0 };
    let samples = (0..samples)
        .into_par_iter()
        .map(|i| {
            let x = if i + 1 == samples { x_max } else { x_min + step * i as f64 };
            let est = density_numeric(m, x, &YLadder::adapted(m, x))?;
            Ok(DensitySample { x, g: est.value, residual: est.residual, converged: est.converged })
        })
        .collect::<Result<Vec<_>, TransformError>>()?;
    Ok(DensityCurve { m, samples })
}

/// ∫ x^k g(x) dx for k = 0..=k_max over [−a, a], splitting at the given
/// interior breakpoints.
pub fn moment_quadrature_of<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    interior: &[f64],
    k_max: usize,
    tolerance: f64,
) -> Result<Vec<f64>, TransformError> {
    let mut breakpoints = vec![-a, a];
    breakpoints.extend(interior.iter().copied().filter(|&b| -a < b && b < a));
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup();
    (0..=k_max)
        .map(|k| {
            let scale = a.powi(k as i32).max(1.0);
            let f = |x: f64| x.powi(k as i32) * g(x);
            integrate(&f, &breakpoints, tolerance * scale, DEFAULT_MAX_SUBDIVISIONS).map(|r| r.value)
        })
        .collect()
}

/// Moments ∫ x^k g_m(x) dx, k = 0..=k_max, by adaptive quadrature of the
/// Stieltjes-inverted density.
pub fn moment_quadrature(m: usize, k_max: usize) -> Result<Vec<f64>, TransformError> {
    if m == 0 {
        return Err(TransformError::ZeroPower);
    }
    if k_max % 2 == 1 || k_max > 8 {
        return Err(TransformError::BadMomentOrder(k_max));
    }
    let points = branch_points(m);
    let mut interior: Vec<f64> = points.iter().flat_map(|&a| [a, -a]).collect();
    interior.push(0.0);
    let g = |x: f64| density_numeric(m, x, &YLadder::adapted(m, x)).map_or(f64::NAN, |e| e.value);
    moment_quadrature_of(g, endpoint_f64(m), &interior, k_max, 1e-10)
}
