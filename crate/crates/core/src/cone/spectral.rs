//! Geodesic caps in the round sphere of curvature `kappa` and the eigenfunction
//! `v = cos(sqrt(kappa) rho)`, which solves `Δv = -2 kappa v` with constant
//! Dirichlet and Neumann data on the cap boundary.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::Vec3;

const GRID: usize = 32;
const REL_STEP: f64 = 5e-3;
/// Azimuthal step. Kept independent of the cap size so `1/J²` does not amplify
/// roundoff near the pole.
const ANGLE_STEP: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDiskCheck {
    pub lambda: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `max |Δv - lambda v|` over a geodesic polar grid, Laplacian from the embedding.
    pub pde_residual: f64,
    pub alpha_measured: f64,
    pub beta_measured: f64,
    /// `max - min` of `|∇v|` along the boundary circle.
    pub beta_spread: f64,
}

fn d1<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

fn d2<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h))
        / (12.0 * h * h)
}

pub fn spectral_disk_check(theta0: f64, kappa: f64) -> Result<SpectralDiskCheck> {
    if !(theta0 > 0.0 && theta0 < PI) {
        return Err(Error::Domain(format!(
            "cap angle must lie in (0, pi), got {theta0}"
        )));
    }
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::Domain(format!(
            "curvature must be positive, got {kappa}"
        )));
    }
    let root = kappa.sqrt();
    let radius = 1.0 / root;
    let rho0 = theta0 / root;
    let h = REL_STEP * rho0;

    // geodesic polar coordinates about the north pole
    let embed = |rho: f64, psi: f64| {
        let (s, c) = (rho / radius).sin_cos();
        Vec3::new(radius * s * psi.cos(), radius * s * psi.sin(), radius * c)
    };
    let v = |rho: f64, psi: f64| embed(rho, psi).z / radius;
    let jacobian = |rho: f64| {
        let e = |m: f64| embed(rho, m * ANGLE_STEP);
        ((-e(2.0) + e(-2.0)) + (e(1.0) - e(-1.0)) * 8.0).norm() / (12.0 * ANGLE_STEP)
    };

    let lambda = -2.0 * kappa;
    let mut pde_residual = 0.0f64;
    for i in 0..GRID {
        let rho = rho0 * (i + 1) as f64 / GRID as f64;
        let j = jacobian(rho);
        let j_rho = d1(&jacobian, rho, h);
        for k in 0..GRID {
            let psi = 2.0 * PI * k as f64 / GRID as f64;
            let v_rr = d2(&|r| v(r, psi), rho, h);
            let v_r = d1(&|r| v(r, psi), rho, h);
            let v_pp = d2(&|p| v(rho, p), psi, ANGLE_STEP);
            let lap = v_rr + j_rho / j * v_r + v_pp / (j * j);
            pde_residual = pde_residual.max((lap - lambda * v(rho, psi)).abs());
        }
    }

    let j0 = jacobian(rho0);
    let (mut b_lo, mut b_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut alpha_measured = 0.0;
    for k in 0..GRID {
        let psi = 2.0 * PI * k as f64 / GRID as f64;
        let v_r = d1(&|r| v(r, psi), rho0, h);
        let v_p = d1(&|p| v(rho0, p), psi, ANGLE_STEP);
        let b = v_r.hypot(v_p / j0);
        b_lo = b_lo.min(b);
        b_hi = b_hi.max(b);
        alpha_measured = v(rho0, psi);
    }

    Ok(SpectralDiskCheck {
        lambda,
        alpha: theta0.cos(),
        beta: root * theta0.sin(),
        pde_residual,
        alpha_measured,
        beta_measured: b_hi,
        beta_spread: b_hi - b_lo,
    })
}
