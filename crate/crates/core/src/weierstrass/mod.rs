//! Minimal immersions of the annulus `rho < |z| < 1` from Weierstrass data.
//!
//! With `Phi = (mu (1 - nu^2) / 2, i mu (1 + nu^2) / 2, mu nu)` the immersion is
//! `u(z) = u0 + Re ∫_{z_ref}^{z} Phi dz`, its metric is `Lambda |dz|^2` with
//! `Lambda = |mu|^2 (1 + |nu|^2)^2 / 4`, and the unit normal is the inverse
//! stereographic image of `nu`.

mod report;
mod schottky;

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::quadrature::{integrate_arc_with, integrate_path_with, DEFAULT_ORDER};
use crate::numeric::{surface_jet, GaussLegendre, LaurentPoly, SurfaceJet, Vec3};

pub use report::FreeBoundaryReport;

pub type ComplexTriple = [Complex64; 3];

/// Number of points per circle used to screen for boundary branch points.
const BRANCH_SCREEN_POINTS: usize = 512;
const PERIOD_TOL: f64 = 1e-10;
/// Largest ratio `r_{k+1} / r_k` of one radial quadrature piece.
const RADIAL_PIECE_RATIO: f64 = 1.25;
/// Largest angle of one arc quadrature piece.
const ARC_PIECE_ANGLE: f64 = PI / 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryComponent {
    Inner,
    Outer,
}

/// Weierstrass data on the annulus together with its precomputed `Phi`.
#[derive(Debug, Clone)]
pub struct WeierstrassData {
    mu: LaurentPoly,
    nu: LaurentPoly,
    rho: f64,
    u0: Vec3,
    z_ref: Complex64,
    phi: [LaurentPoly; 3],
    phi_prime: [LaurentPoly; 3],
    mu_prime: LaurentPoly,
    nu_prime: LaurentPoly,
    interior_branch_points: usize,
    rule: GaussLegendre,
}

/// Pointwise record of the immersion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSample {
    pub z: Complex64,
    pub u: Vec3,
    pub normal: Vec3,
    pub lambda: f64,
    pub gauss_curvature: f64,
    pub hopf: Complex64,
}

fn phi_polys(mu: &LaurentPoly, nu: &LaurentPoly) -> [LaurentPoly; 3] {
    let one = LaurentPoly::constant(Complex64::new(1.0, 0.0));
    let nu2 = nu * nu;
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, 0.5);
    [
        (mu * &(&one - &nu2)).scale(half),
        (mu * &(&one + &nu2)).scale(half_i),
        mu * nu,
    ]
}

fn re3(v: ComplexTriple) -> Vec3 {
    Vec3::new(v[0].re, v[1].re, v[2].re)
}

fn im3(v: ComplexTriple) -> Vec3 {
    Vec3::new(v[0].im, v[1].im, v[2].im)
}

impl WeierstrassData {
    pub fn new(
        mu: LaurentPoly,
        nu: LaurentPoly,
        rho: f64,
        u0: Vec3,
        z_ref: Complex64,
    ) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::InvalidData("mu vanishes identically".into()));
        }
        if !(rho > 0.0 && rho < 1.0) {
            return Err(Error::InvalidData(format!(
                "inner radius {rho} outside (0, 1)"
            )));
        }
        let r_ref = z_ref.norm();
        if !(r_ref >= rho * (1.0 - 1e-12) && r_ref <= 1.0 + 1e-12) {
            return Err(Error::InvalidData(format!(
                "basepoint {z_ref} outside the closed annulus"
            )));
        }
        let phi = phi_polys(&mu, &nu);
        let phi_prime = [
            phi[0].derivative(),
            phi[1].derivative(),
            phi[2].derivative(),
        ];
        let mut data = Self {
            mu_prime: mu.derivative(),
            nu_prime: nu.derivative(),
            mu,
            nu,
            rho,
            u0,
            z_ref,
            phi,
            phi_prime,
            interior_branch_points: 0,
            rule: GaussLegendre::new(DEFAULT_ORDER)?,
        };
        data.screen_boundary_branch_points()?;
        let period = data.real_period_exact();
        if period.iter().any(|p| p.abs() > PERIOD_TOL) {
            return Err(Error::InvalidData(format!(
                "real period ({:e}, {:e}, {:e}) around the core circle does not vanish",
                period[0], period[1], period[2]
            )));
        }
        data.interior_branch_points = data.count_interior_zeros_of_mu()?;
        Ok(data)
    }

    /// `mu = c z^-2`, `nu = z`: a catenoid of neck radius `|c|`.
    pub fn catenoid(c: f64, rho: f64) -> Result<Self> {
        Self::new(
            LaurentPoly::from_real_terms(&[(-2, c)]),
            LaurentPoly::from_real_terms(&[(1, 1.0)]),
            rho,
            Vec3::new(-c, 0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
    }

    /// `mu = scale`, `nu = 0`: the horizontal plane, `u = u0 + scale (Re z, -Im z, 0) / 2`.
    /// With `scale = 2` and `u0 = (1, 0, 0)` the outer circle is the unit equator.
    pub fn plane(scale: f64, rho: f64) -> Result<Self> {
        Self::new(
            LaurentPoly::from_real_terms(&[(0, scale)]),
            LaurentPoly::zero(),
            rho,
            Vec3::new(0.5 * scale, 0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
    }

    pub fn mu(&self) -> &LaurentPoly {
        &self.mu
    }

    pub fn nu(&self) -> &LaurentPoly {
        &self.nu
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn u0(&self) -> Vec3 {
        self.u0
    }

    pub fn z_ref(&self) -> Complex64 {
        self.z_ref
    }

    /// Zeros of `mu` strictly inside the annulus; these are interior branch points.
    pub fn interior_branch_points(&self) -> usize {
        self.interior_branch_points
    }

    pub fn radius(&self, component: BoundaryComponent) -> f64 {
        match component {
            BoundaryComponent::Inner => self.rho,
            BoundaryComponent::Outer => 1.0,
        }
    }

    fn screen_boundary_branch_points(&self) -> Result<()> {
        for r in [self.rho, 1.0] {
            let values: Vec<(Complex64, f64)> = (0..BRANCH_SCREEN_POINTS)
                .map(|k| {
                    let z = Complex64::from_polar(r, TAU * k as f64 / BRANCH_SCREEN_POINTS as f64);
                    self.mu.eval(z).map(|m| (z, m.norm()))
                })
                .collect::<Result<_>>()?;
            let max = values.iter().map(|v| v.1).fold(0.0, f64::max);
            if let Some(&(z, _)) = values.iter().find(|v| v.1 <= 1e-10 * max.max(1.0)) {
                return Err(Error::BranchPoint(z));
            }
        }
        Ok(())
    }

    /// Argument principle for `mu` between the two boundary circles.
    fn count_interior_zeros_of_mu(&self) -> Result<usize> {
        let mut log_derivative = |z: Complex64| -> Result<[Complex64; 1]> {
            Ok([self.mu_prime.eval(z)? / self.mu.eval(z)?])
        };
        let [outer] = integrate_arc_with(&self.rule, &mut log_derivative, 1.0, 0.0, TAU, 32)?;
        let [inner] = integrate_arc_with(&self.rule, &mut log_derivative, self.rho, 0.0, TAU, 32)?;
        let winding = (outer - inner) / Complex64::new(0.0, TAU);
        Ok(winding.re.round().max(0.0) as usize)
    }

    /// `Re ∮ Phi dz` around any circle `|z| = r`, from the residues of `Phi`.
    pub fn real_period_exact(&self) -> [f64; 3] {
        self.phi
            .clone()
            .map(|p| (Complex64::new(0.0, TAU) * p.residue()).re)
    }

    /// `Re ∮ Phi dz` around `|z| = r` by quadrature.
    pub fn real_period(&self, r: f64) -> Result<[f64; 3]> {
        let mut f = |z: Complex64| self.phi(z);
        let v = integrate_arc_with(&self.rule, &mut f, r, 0.0, TAU, 16)?;
        Ok(v.map(|c| c.re))
    }

    pub fn phi(&self, z: Complex64) -> Result<ComplexTriple> {
        Ok([
            self.phi[0].eval(z)?,
            self.phi[1].eval(z)?,
            self.phi[2].eval(z)?,
        ])
    }

    pub fn phi_prime(&self, z: Complex64) -> Result<ComplexTriple> {
        Ok([
            self.phi_prime[0].eval(z)?,
            self.phi_prime[1].eval(z)?,
            self.phi_prime[2].eval(z)?,
        ])
    }

    /// `u0 + Re ∫ Phi dz` along the radial segment from `z_ref` to `|z|`, then
    /// the shorter circular arc to `z`.
    pub fn surface_point(&self, z: Complex64) -> Result<Vec3> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::Pole(z));
        }
        let mut f = |w: Complex64| self.phi(w);
        let (r0, t0) = self.z_ref.to_polar();
        let (r1, t1) = z.to_polar();

        let mut total = [Complex64::new(0.0, 0.0); 3];
        if r1 != r0 {
            let pieces = ((r1 / r0).ln().abs() / RADIAL_PIECE_RATIO.ln())
                .ceil()
                .max(1.0) as usize;
            let ratio = (r1 / r0).powf(1.0 / pieces as f64);
            let dir = Complex64::from_polar(1.0, t0);
            let path: Vec<Complex64> = (0..=pieces)
                .map(|k| {
                    let r = if k == pieces {
                        r1
                    } else {
                        r0 * ratio.powi(k as i32)
                    };
                    dir * r
                })
                .collect();
            let part = integrate_path_with(&self.rule, &mut f, &path)?;
            for k in 0..3 {
                total[k] += part[k];
            }
        }
        let mut dt = t1 - t0;
        if dt > PI {
            dt -= TAU;
        } else if dt < -PI {
            dt += TAU;
        }
        if dt != 0.0 {
            let pieces = (dt.abs() / ARC_PIECE_ANGLE).ceil().max(1.0) as usize;
            let part = integrate_arc_with(&self.rule, &mut f, r1, t0, t0 + dt, pieces)?;
            for k in 0..3 {
                total[k] += part[k];
            }
        }
        Ok(self.u0 + re3(total))
    }

    /// `u(to)` from a known `u(from)` by one quadrature panel along the straight
    /// segment. Accurate for steps short compared with the distance to the origin.
    pub fn surface_point_from(&self, from: Complex64, u_from: Vec3, to: Complex64) -> Result<Vec3> {
        let mut f = |w: Complex64| self.phi(w);
        let part = integrate_path_with(&self.rule, &mut f, &[from, to])?;
        Ok(u_from + re3(part))
    }

    /// Immersion in logarithmic coordinates `z = exp(sigma + i theta)`.
    pub fn log_chart_point(&self, sigma: f64, theta: f64) -> Result<Vec3> {
        self.surface_point(Complex64::new(sigma, theta).exp())
    }

    /// Jet of the immersion in logarithmic coordinates. The 5×5 stencil is
    /// filled by short segment integrals from the center point.
    pub fn log_chart_jet(&self, sigma: f64, theta: f64, h: f64) -> Result<SurfaceJet> {
        let center = Complex64::new(sigma, theta).exp();
        let u_center = self.surface_point(center)?;
        surface_jet(
            |s, t| {
                let z = Complex64::new(s, t).exp();
                if z == center {
                    Ok(u_center)
                } else {
                    self.surface_point_from(center, u_center, z)
                }
            },
            sigma,
            theta,
            h,
        )
    }

    pub fn metric_lambda(&self, z: Complex64) -> Result<f64> {
        let mu = self.mu.eval(z)?;
        let nu = self.nu.eval(z)?;
        let s = 1.0 + nu.norm_sqr();
        Ok(0.25 * mu.norm_sqr() * s * s)
    }

    /// `d Lambda / d theta` at `z = r e^{i theta}`, using `f_theta = i z f'`.
    pub fn metric_lambda_theta(&self, z: Complex64) -> Result<f64> {
        let iz = Complex64::i() * z;
        let mu = self.mu.eval(z)?;
        let nu = self.nu.eval(z)?;
        let mu_t = iz * self.mu_prime.eval(z)?;
        let nu_t = iz * self.nu_prime.eval(z)?;
        let d_abs2 = |f: Complex64, f_t: Complex64| 2.0 * (f.conj() * f_t).re;
        let s = 1.0 + nu.norm_sqr();
        Ok(0.25 * (d_abs2(mu, mu_t) * s * s + mu.norm_sqr() * 2.0 * s * d_abs2(nu, nu_t)))
    }

    /// Unit normal `(2 Re nu, 2 Im nu, |nu|^2 - 1) / (1 + |nu|^2)`; the north
    /// pole where `nu` is infinite.
    pub fn gauss_map(&self, z: Complex64) -> Vec3 {
        match self.nu.eval(z) {
            Ok(nu) if nu.re.is_finite() && nu.im.is_finite() => {
                let n2 = nu.norm_sqr();
                if !n2.is_finite() {
                    return Vec3::new(0.0, 0.0, 1.0);
                }
                Vec3::new(2.0 * nu.re, 2.0 * nu.im, n2 - 1.0) / (1.0 + n2)
            }
            _ => Vec3::new(0.0, 0.0, 1.0),
        }
    }

    /// `K = -(4 |nu'| / (|mu| (1 + |nu|^2)^2))^2`.
    pub fn gauss_curvature(&self, z: Complex64) -> Result<f64> {
        let mu = self.mu.eval(z)?;
        if mu == Complex64::new(0.0, 0.0) {
            return Err(Error::BranchPoint(z));
        }
        let nu = self.nu.eval(z)?;
        let dnu = self.nu_prime.eval(z)?;
        let s = 1.0 + nu.norm_sqr();
        let q = 4.0 * dnu.norm() / (mu.norm() * s * s);
        Ok(-q * q)
    }

    /// `z^4 <u_zz^perp, u_zz^perp> = z^4 l^2 / 4` with `l = -mu nu'`.
    pub fn hopf_quantity(&self, z: Complex64) -> Result<Complex64> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::Pole(z));
        }
        let l = -(self.mu.eval(z)? * self.nu_prime.eval(z)?);
        Ok(z.powi(4) * l * l / 4.0)
    }

    fn check_on_boundary(&self, z: Complex64) -> Result<()> {
        let r = z.norm();
        if (r - 1.0).abs() <= 1e-12 || (r - self.rho).abs() <= 1e-12 * self.rho.max(1e-300) {
            Ok(())
        } else {
            Err(Error::Domain(format!("|z| = {r} is not a boundary radius")))
        }
    }

    /// `u_theta = -Im(z Phi)` and `u_thetatheta = -Re(z Phi + z^2 Phi')`.
    pub fn boundary_tangents(&self, z: Complex64) -> Result<(Vec3, Vec3)> {
        self.check_on_boundary(z)?;
        self.angular_derivatives(z)
    }

    fn angular_derivatives(&self, z: Complex64) -> Result<(Vec3, Vec3)> {
        let phi = self.phi(z)?;
        let dphi = self.phi_prime(z)?;
        let z2 = z * z;
        let u_t = -im3(phi.map(|c| z * c));
        let mut second = [Complex64::new(0.0, 0.0); 3];
        for k in 0..3 {
            second[k] = z * phi[k] + z2 * dphi[k];
        }
        Ok((u_t, -re3(second)))
    }

    /// `u_r = Re(Phi e^{i theta})`.
    pub fn radial_derivative(&self, z: Complex64) -> Result<Vec3> {
        let dir = z / z.norm();
        Ok(re3(self.phi(z)?.map(|c| c * dir)))
    }

    /// Curvature `|u_theta × u_thetatheta| / |u_theta|^3` of a boundary circle's image.
    pub fn boundary_curvature(&self, component: BoundaryComponent, theta: f64) -> Result<f64> {
        let z = Complex64::from_polar(self.radius(component), theta);
        let (u_t, u_tt) = self.angular_derivatives(z)?;
        let speed = u_t.norm();
        if !(speed > 1e-14) {
            return Err(Error::Degenerate(format!(
                "boundary speed {speed:e} at {z}"
            )));
        }
        Ok(u_t.cross(&u_tt).norm() / speed.powi(3))
    }

    pub fn sample(&self, z: Complex64) -> Result<SurfaceSample> {
        Ok(SurfaceSample {
            z,
            u: self.surface_point(z)?,
            normal: self.gauss_map(z),
            lambda: self.metric_lambda(z)?,
            gauss_curvature: self.gauss_curvature(z)?,
            hopf: self.hopf_quantity(z)?,
        })
    }

    /// `n` equally spaced points on a boundary circle, starting at angle 0.
    pub fn boundary_grid(&self, component: BoundaryComponent, n: usize) -> Vec<Complex64> {
        let r = self.radius(component);
        (0..n)
            .map(|k| Complex64::from_polar(r, TAU * k as f64 / n as f64))
            .collect()
    }

    /// `n × n` points strictly inside the annulus, uniform in `ln|z|` and `arg z`.
    pub fn interior_grid(&self, n: usize) -> Vec<Complex64> {
        let lo = self.rho.ln();
        let mut pts = Vec::with_capacity(n * n);
        for i in 0..n {
            let sigma = lo * (1.0 - (i as f64 + 0.5) / n as f64);
            for j in 0..n {
                pts.push(Complex64::new(sigma, TAU * j as f64 / n as f64).exp());
            }
        }
        pts
    }
}
