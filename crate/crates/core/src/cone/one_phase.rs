//! Closed-form homogeneous solutions of the one-phase cone problems.

use std::f64::consts::{FRAC_PI_2, PI};

use super::legendre::q1_positive_root;
use super::profile::{gradient_map, spherical_frame, AxisymmetricHarmonic, ConeDomain, Profile};
use crate::error::{Error, Result};
use crate::numeric::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePhaseKind {
    HalfSpace,
    DoubleCone,
}

/// `v(x) = c |x| g(theta)` on `domain`, with boundary value `boundary_value |x|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OnePhaseSolution {
    pub domain: ConeDomain,
    pub profile: AxisymmetricHarmonic,
    pub c: f64,
    /// `0` for the homogeneous Dirichlet problem, `alpha` for the cap problem.
    pub boundary_value: f64,
}

/// Boundary residuals of a solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCheck {
    /// `max |c g - alpha|`
    pub value: f64,
    /// `max |c sqrt(g^2 + g'^2) - 1|`
    pub gradient: f64,
}

pub fn solve_one_phase(kind: OnePhaseKind) -> Result<OnePhaseSolution> {
    match kind {
        OnePhaseKind::HalfSpace => Ok(OnePhaseSolution {
            domain: ConeDomain::new(0.0, FRAC_PI_2)?,
            profile: AxisymmetricHarmonic::new(1.0, 0.0)?,
            c: 1.0,
            boundary_value: 0.0,
        }),
        OnePhaseKind::DoubleCone => {
            let theta1 = q1_positive_root()?.acos();
            let profile = AxisymmetricHarmonic::new(0.0, 1.0)?;
            let slope = profile.g_prime(theta1)?.abs();
            Ok(OnePhaseSolution {
                domain: ConeDomain::new(theta1, PI - theta1)?,
                profile,
                c: 1.0 / slope,
                boundary_value: 0.0,
            })
        }
    }
}

/// The cap `theta < arccos(alpha)` with `v = |x| cos(theta)`.
pub fn solve_pr2_cap(alpha_bc: f64) -> Result<OnePhaseSolution> {
    if !(alpha_bc.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "cap boundary value must lie in (-1, 1), got {alpha_bc}"
        )));
    }
    Ok(OnePhaseSolution {
        domain: ConeDomain::new(0.0, alpha_bc.acos())?,
        profile: AxisymmetricHarmonic::new(1.0, 0.0)?,
        c: 1.0,
        boundary_value: alpha_bc,
    })
}

impl OnePhaseSolution {
    /// Profile with the normalization folded in.
    pub fn scaled_profile(&self) -> AxisymmetricHarmonic {
        self.profile.scaled(self.c)
    }

    pub fn value(&self, x: &Vec3) -> Result<f64> {
        self.scaled_profile().value(x)
    }

    pub fn gradient(&self, theta: f64, phi: f64) -> Result<Vec3> {
        gradient_map(&self.scaled_profile(), theta, phi)
    }

    /// `c sqrt(g^2 + g'^2)`
    pub fn gradient_norm(&self, theta: f64) -> Result<f64> {
        let p = self.scaled_profile();
        Ok(p.g(theta)?.hypot(p.g_prime(theta)?))
    }

    /// Full opening angle of the cone complement for the symmetric band, or of the cap.
    pub fn aperture(&self) -> f64 {
        if self.domain.theta_lo > 0.0 {
            2.0 * self.domain.theta_lo
        } else {
            2.0 * self.domain.theta_hi
        }
    }

    pub fn boundary_check(&self) -> Result<BoundaryCheck> {
        let p = self.scaled_profile();
        let mut out = BoundaryCheck {
            value: 0.0,
            gradient: 0.0,
        };
        for t in self.domain.boundary_thetas() {
            out.value = out.value.max((p.g(t)? - self.boundary_value).abs());
            out.gradient = out.gradient.max((self.gradient_norm(t)? - 1.0).abs());
        }
        Ok(out)
    }

    /// Angles between `∇v(x)` and `x` at `n` points of each boundary circle.
    pub fn boundary_gradient_angles(&self, n: usize) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(2 * n);
        for t in self.domain.boundary_thetas() {
            for j in 0..n {
                let phi = 2.0 * PI * j as f64 / n as f64;
                let (x, _, _) = spherical_frame(t, phi);
                let y = self.gradient(t, phi)?;
                out.push(y.cross(&x).norm().atan2(y.dot(&x)));
            }
        }
        Ok(out)
    }
}
