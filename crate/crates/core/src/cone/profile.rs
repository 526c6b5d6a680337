//! Angular profiles `g(theta)` of degree-1 homogeneous functions `v(x) = |x| g(theta)`.
//!
//! The Laplacian is the geometer's one throughout: on the unit sphere a degree-1
//! harmonic restricts to an eigenfunction with `Δ g = -2 g`.

use nalgebra::Matrix3;

use super::legendre::{legendre_q1, legendre_q1_prime, legendre_q1_second};
use crate::error::{Error, Result};
use crate::numeric::Vec3;

/// Unit frame `(r, theta, phi)` at a point of the sphere.
pub fn spherical_frame(theta: f64, phi: f64) -> (Vec3, Vec3, Vec3) {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    (
        Vec3::new(st * cp, st * sp, ct),
        Vec3::new(ct * cp, ct * sp, -st),
        Vec3::new(-sp, cp, 0.0),
    )
}

/// Polar and azimuthal angle of a nonzero vector.
pub fn spherical_angles(x: &Vec3) -> (f64, f64) {
    let rho = x.x.hypot(x.y);
    (rho.atan2(x.z), x.y.atan2(x.x))
}

/// A rotationally symmetric profile with exact derivatives.
pub trait Profile {
    fn g(&self, theta: f64) -> Result<f64>;
    fn g_prime(&self, theta: f64) -> Result<f64>;
    fn g_second(&self, theta: f64) -> Result<f64>;

    /// `Δ_S g + 2 g`, zero exactly when `|x| g` is harmonic.
    fn eigen_residual(&self, theta: f64) -> Result<f64> {
        let cot = theta.cos() / theta.sin();
        Ok(self.g_second(theta)? + cot * self.g_prime(theta)? + 2.0 * self.g(theta)?)
    }

    /// `v(x) = |x| g(theta(x))`.
    fn value(&self, x: &Vec3) -> Result<f64> {
        let r = x.norm();
        if r == 0.0 {
            return Ok(0.0);
        }
        Ok(r * self.g(spherical_angles(x).0)?)
    }
}

/// `g = A cos(theta) + B Q_1(cos(theta))`, the axisymmetric eigenvalue-2 family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisymmetricHarmonic {
    pub a: f64,
    pub b: f64,
}

impl AxisymmetricHarmonic {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain(format!(
                "coefficients must be finite, got ({a}, {b})"
            )));
        }
        if a == 0.0 && b == 0.0 {
            return Err(Error::Domain(
                "(A, B) = (0, 0) is not a valid profile".into(),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            a: c * self.a,
            b: c * self.b,
        }
    }

    fn check_pole(&self, theta: f64) -> Result<f64> {
        let x = theta.cos();
        if self.b != 0.0 && x.abs() >= 1.0 {
            return Err(Error::Domain(format!(
                "Q1 term is singular at the pole theta = {theta}"
            )));
        }
        Ok(x)
    }
}

impl Profile for AxisymmetricHarmonic {
    fn g(&self, theta: f64) -> Result<f64> {
        let x = self.check_pole(theta)?;
        let q = if self.b == 0.0 {
            0.0
        } else {
            self.b * legendre_q1(x)?
        };
        Ok(self.a * x + q)
    }

    fn g_prime(&self, theta: f64) -> Result<f64> {
        let x = self.check_pole(theta)?;
        let q = if self.b == 0.0 {
            0.0
        } else {
            self.b * legendre_q1_prime(x)?
        };
        Ok(-theta.sin() * (self.a + q))
    }

    fn g_second(&self, theta: f64) -> Result<f64> {
        let x = self.check_pole(theta)?;
        let (q1, q2) = if self.b == 0.0 {
            (0.0, 0.0)
        } else {
            (
                self.b * legendre_q1_prime(x)?,
                self.b * legendre_q1_second(x)?,
            )
        };
        let s = theta.sin();
        Ok(-x * (self.a + q1) + s * s * q2)
    }
}

/// `f(x) = |x|`, whose gradient image is the unit sphere. Not harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RadialNorm;

impl Profile for RadialNorm {
    fn g(&self, _theta: f64) -> Result<f64> {
        Ok(1.0)
    }
    fn g_prime(&self, _theta: f64) -> Result<f64> {
        Ok(0.0)
    }
    fn g_second(&self, _theta: f64) -> Result<f64> {
        Ok(0.0)
    }
}

/// `g = cos(2 theta)`, a non-harmonic control profile.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CosTwoTheta;

impl Profile for CosTwoTheta {
    fn g(&self, theta: f64) -> Result<f64> {
        Ok((2.0 * theta).cos())
    }
    fn g_prime(&self, theta: f64) -> Result<f64> {
        Ok(-2.0 * (2.0 * theta).sin())
    }
    fn g_second(&self, theta: f64) -> Result<f64> {
        Ok(-4.0 * (2.0 * theta).cos())
    }
}

/// Polar-angle band `theta_lo < theta < theta_hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeDomain {
    pub theta_lo: f64,
    pub theta_hi: f64,
}

impl ConeDomain {
    pub fn new(theta_lo: f64, theta_hi: f64) -> Result<Self> {
        if !(theta_lo >= 0.0 && theta_hi <= std::f64::consts::PI && theta_lo < theta_hi) {
            return Err(Error::Domain(format!(
                "cone band needs 0 <= theta_lo < theta_hi <= pi, got ({theta_lo}, {theta_hi})"
            )));
        }
        Ok(Self { theta_lo, theta_hi })
    }

    pub fn contains(&self, theta: f64) -> bool {
        theta > self.theta_lo && theta < self.theta_hi
    }

    /// Band endpoints that are boundary circles, i.e. not poles.
    pub fn boundary_thetas(&self) -> Vec<f64> {
        [self.theta_lo, self.theta_hi]
            .into_iter()
            .filter(|t| *t > 0.0 && *t < std::f64::consts::PI)
            .collect()
    }

    /// Cell-centred polar angles, strictly inside the band.
    pub fn interior_thetas(&self, n: usize) -> Vec<f64> {
        let w = self.theta_hi - self.theta_lo;
        (0..n)
            .map(|i| self.theta_lo + w * (i as f64 + 0.5) / n as f64)
            .collect()
    }
}

/// `∇v = g r + g' theta` on the unit sphere; degree 0, so the same along the ray.
pub fn gradient_map<P: Profile + ?Sized>(profile: &P, theta: f64, phi: f64) -> Result<Vec3> {
    let (r, t, _) = spherical_frame(theta, phi);
    Ok(r * profile.g(theta)? + t * profile.g_prime(theta)?)
}

/// Hessian of `v` at the unit vector `(theta, phi)`:
/// `(g + g'') tt^T + (g + g' cot(theta)) pp^T`. The radial direction is in the kernel.
pub fn hessian<P: Profile + ?Sized>(profile: &P, theta: f64, phi: f64) -> Result<Matrix3<f64>> {
    let (_, t, p) = spherical_frame(theta, phi);
    let (lt, lp) = hessian_eigenvalues(profile, theta)?;
    Ok(t * t.transpose() * lt + p * p.transpose() * lp)
}

/// Nonradial Hessian eigenvalues `(g + g'', g + g' cot(theta))`.
pub fn hessian_eigenvalues<P: Profile + ?Sized>(profile: &P, theta: f64) -> Result<(f64, f64)> {
    let g = profile.g(theta)?;
    let cot = theta.cos() / theta.sin();
    Ok((
        g + profile.g_second(theta)?,
        g + profile.g_prime(theta)? * cot,
    ))
}
