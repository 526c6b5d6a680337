//! Fixed-order Gauss–Legendre quadrature along polylines and circular arcs.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{non_finite, Error, Result};

pub const DEFAULT_ORDER: usize = 16;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes are the roots of `P_n`, found by Newton iteration from the
    /// Chebyshev-like initial guess `cos(pi (i + 3/4) / (n + 1/2))`.
    pub fn new(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::Domain(format!(
                "quadrature order must be >= 2, got {order}"
            )));
        }
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates a vector-valued `f` over the real interval `[a, b]`.
    pub fn integrate<const N: usize, F>(&self, a: f64, b: f64, mut f: F) -> Result<[Complex64; N]>
    where
        F: FnMut(f64) -> Result<[Complex64; N]>,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = [Complex64::new(0.0, 0.0); N];
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let v = f(mid + half * x)?;
            for k in 0..N {
                acc[k] += v[k] * (w * half);
            }
        }
        Ok(acc)
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn check_finite<const N: usize>(v: &[Complex64; N], z: Complex64) -> Result<()> {
    if v.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
        Ok(())
    } else {
        Err(non_finite(format!("integrand at z = {z}")))
    }
}

/// Integrates `f(z) dz` along a polyline, one Gauss–Legendre rule of `order`
/// nodes per segment.
pub fn integrate_path<const N: usize, F>(
    mut f: F,
    path: &[Complex64],
    order: usize,
) -> Result<[Complex64; N]>
where
    F: FnMut(Complex64) -> Result<[Complex64; N]>,
{
    let rule = GaussLegendre::new(order)?;
    integrate_path_with(&rule, &mut f, path)
}

pub(crate) fn integrate_path_with<const N: usize, F>(
    rule: &GaussLegendre,
    f: &mut F,
    path: &[Complex64],
) -> Result<[Complex64; N]>
where
    F: FnMut(Complex64) -> Result<[Complex64; N]>,
{
    let mut total = [Complex64::new(0.0, 0.0); N];
    for seg in path.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        let dz = b - a;
        let part = rule.integrate(0.0, 1.0, |t| {
            let z = a + dz * t;
            let v = f(z)?;
            check_finite(&v, z)?;
            Ok(v.map(|c| c * dz))
        })?;
        for k in 0..N {
            total[k] += part[k];
        }
    }
    Ok(total)
}

/// Integrates `f(z) dz` along the arc `z = r e^{i t}`, `t` from `t0` to `t1`,
/// split into `pieces` equal sub-arcs.
pub(crate) fn integrate_arc_with<const N: usize, F>(
    rule: &GaussLegendre,
    f: &mut F,
    radius: f64,
    t0: f64,
    t1: f64,
    pieces: usize,
) -> Result<[Complex64; N]>
where
    F: FnMut(Complex64) -> Result<[Complex64; N]>,
{
    let mut total = [Complex64::new(0.0, 0.0); N];
    let pieces = pieces.max(1);
    let step = (t1 - t0) / pieces as f64;
    for k in 0..pieces {
        let a = t0 + step * k as f64;
        let part = rule.integrate(a, a + step, |t| {
            let z = Complex64::from_polar(radius, t);
            let v = f(z)?;
            check_finite(&v, z)?;
            let dz = Complex64::i() * z;
            Ok(v.map(|c| c * dz))
        })?;
        for j in 0..N {
            total[j] += part[j];
        }
    }
    Ok(total)
}

/// Closed polygon with `n` vertices on the circle `|z| = r` (first vertex repeated).
pub fn circle_polyline(radius: f64, n: usize) -> Vec<Complex64> {
    (0..=n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64))
        .collect()
}
