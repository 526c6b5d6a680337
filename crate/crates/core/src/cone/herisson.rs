//! The hérisson: the image surface `∇v(G)` parametrized by `(theta, phi)`.

use std::f64::consts::PI;

use super::profile::{gradient_map, hessian_eigenvalues, spherical_frame, ConeDomain, Profile};
use crate::error::{Error, Result};
use crate::numeric::{curvatures, surface_jet, Vec3};

/// Finite-difference step for the image jet, in radians.
pub const HERISSON_STEP: f64 = 1e-3;
/// Shape operators with a principal curvature below this are treated as degenerate.
pub const MIN_CURVATURE: f64 = 1e-8;
/// Smallest admissible nonradial Hessian singular value.
pub const MIN_HESSIAN_RANK: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HerissonSample {
    pub theta: f64,
    pub phi: f64,
    /// Source point on the unit sphere.
    pub x: Vec3,
    /// `∇v(x)`.
    pub y: Vec3,
    /// Image normal, oriented to agree with `x` across the surface.
    pub n_img: Option<Vec3>,
    pub mean_curvature: Option<f64>,
    /// Curvature radii `-1/kappa_i` with respect to `n_img`.
    pub radii: Option<(f64, f64)>,
    pub radii_sum: Option<f64>,
    pub hess_trace: f64,
    /// Nonradial Hessian eigenvalues.
    pub hess_eigen: (f64, f64),
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HerissonGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    /// Row-major, theta outer.
    pub samples: Vec<HerissonSample>,
}

impl HerissonGrid {
    pub fn regular(&self) -> impl Iterator<Item = &HerissonSample> {
        self.samples.iter().filter(|s| s.regular)
    }

    pub fn degenerate_count(&self) -> usize {
        self.samples.iter().filter(|s| !s.regular).count()
    }
}

/// Samples the image on a cell-centred `n_theta × n_phi` grid inside `domain`.
pub fn herisson_surface<P: Profile + ?Sized>(
    profile: &P,
    domain: &ConeDomain,
    n_theta: usize,
    n_phi: usize,
) -> Result<HerissonGrid> {
    if n_theta == 0 || n_phi == 0 {
        return Err(Error::Domain(
            "hérisson grid needs at least one sample per direction".into(),
        ));
    }
    let phis: Vec<f64> = (0..n_phi)
        .map(|j| 2.0 * PI * j as f64 / n_phi as f64)
        .collect();
    let mut samples = Vec::with_capacity(n_theta * n_phi);
    // sign of the image normal relative to x, fixed at the first regular sample
    let mut orientation: Option<f64> = None;
    for theta in domain.interior_thetas(n_theta) {
        for &phi in &phis {
            samples.push(sample(profile, theta, phi, &mut orientation)?);
        }
    }
    Ok(HerissonGrid {
        n_theta,
        n_phi,
        samples,
    })
}

fn sample<P: Profile + ?Sized>(
    profile: &P,
    theta: f64,
    phi: f64,
    orientation: &mut Option<f64>,
) -> Result<HerissonSample> {
    let (x, _, _) = spherical_frame(theta, phi);
    let y = gradient_map(profile, theta, phi)?;
    let (lt, lp) = hessian_eigenvalues(profile, theta)?;
    let mut out = HerissonSample {
        theta,
        phi,
        x,
        y,
        n_img: None,
        mean_curvature: None,
        radii: None,
        radii_sum: None,
        hess_trace: lt + lp,
        hess_eigen: (lt, lp),
        regular: false,
    };
    let jet = surface_jet(
        |t, p| gradient_map(profile, t, p),
        theta,
        phi,
        HERISSON_STEP,
    )?;
    let rec = match curvatures(&jet) {
        Ok(rec) => rec,
        Err(Error::Degenerate(_)) => return Ok(out),
        Err(e) => return Err(e),
    };
    let sign = *orientation.get_or_insert(if rec.normal.dot(&x) >= 0.0 { 1.0 } else { -1.0 });
    let (k1, k2) = (sign * rec.kappa1, sign * rec.kappa2);
    out.n_img = Some(rec.normal * sign);
    out.mean_curvature = Some(sign * rec.h);
    let rank_ok = lt.abs().min(lp.abs()) > MIN_HESSIAN_RANK;
    if k1.abs().min(k2.abs()) >= MIN_CURVATURE && rank_ok {
        let radii = (-1.0 / k1, -1.0 / k2);
        out.radii = Some(radii);
        out.radii_sum = Some(radii.0 + radii.1);
        out.regular = true;
    }
    Ok(out)
}

/// Gauss-map inversion and curvature-radii identity at regular samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prop1Report {
    /// `max |N_img - x|`
    pub normal_deviation: f64,
    /// `max |radii_sum - hess_trace| / (|R_1| + |R_2|)`
    pub radii_mismatch: f64,
    pub regular: usize,
    pub degenerate: usize,
}

/// Minimality of the image at regular samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prop2Report {
    pub max_abs_h: f64,
    pub regular: usize,
    pub degenerate: usize,
}

fn require_regular(grid: &HerissonGrid) -> Result<usize> {
    match grid.regular().count() {
        0 => Err(Error::InsufficientData {
            total: grid.samples.len(),
        }),
        n => Ok(n),
    }
}

pub fn verify_prop1(grid: &HerissonGrid) -> Result<Prop1Report> {
    let regular = require_regular(grid)?;
    let mut normal_deviation = 0.0f64;
    let mut radii_mismatch = 0.0f64;
    for s in grid.regular() {
        let (n, (r1, r2), sum) = match (s.n_img, s.radii, s.radii_sum) {
            (Some(n), Some(r), Some(sum)) => (n, r, sum),
            _ => continue,
        };
        normal_deviation = normal_deviation.max((n - s.x).norm());
        radii_mismatch = radii_mismatch.max((sum - s.hess_trace).abs() / (r1.abs() + r2.abs()));
    }
    Ok(Prop1Report {
        normal_deviation,
        radii_mismatch,
        regular,
        degenerate: grid.degenerate_count(),
    })
}

pub fn verify_prop2(grid: &HerissonGrid) -> Result<Prop2Report> {
    let regular = require_regular(grid)?;
    let max_abs_h = grid
        .regular()
        .filter_map(|s| s.mean_curvature)
        .fold(0.0f64, |m, h| m.max(h.abs()));
    Ok(Prop2Report {
        max_abs_h,
        regular,
        degenerate: grid.degenerate_count(),
    })
}

/// `∇v` on the tensor grid `thetas × phis`, theta outer.
pub fn gradient_image<P: Profile + ?Sized>(
    profile: &P,
    thetas: &[f64],
    phis: &[f64],
) -> Result<Vec<Vec3>> {
    let mut out = Vec::with_capacity(thetas.len() * phis.len());
    for &t in thetas {
        for &p in phis {
            out.push(gradient_map(profile, t, p)?);
        }
    }
    Ok(out)
}

/// Symmetric Hausdorff distance between two finite point clouds.
pub fn hausdorff_distance(a: &[Vec3], b: &[Vec3]) -> f64 {
    fn directed(a: &[Vec3], b: &[Vec3]) -> f64 {
        a.iter()
            .map(|p| {
                b.iter()
                    .map(|q| (p - q).norm_squared())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max)
            .sqrt()
    }
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    directed(a, b).max(directed(b, a))
}

/// Angles between the image normal and the source direction along each boundary
/// circle of `domain`, sampled at `n_phi` azimuths.
pub fn boundary_normal_angles<P: Profile + ?Sized>(
    profile: &P,
    domain: &ConeDomain,
    n_phi: usize,
) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for theta in domain.boundary_thetas() {
        for j in 0..n_phi {
            let phi = 2.0 * PI * j as f64 / n_phi as f64;
            let jet = surface_jet(
                |t, p| gradient_map(profile, t, p),
                theta,
                phi,
                HERISSON_STEP,
            )?;
            let n = curvatures(&jet)?.normal;
            let (x, _, _) = spherical_frame(theta, phi);
            let c = n.dot(&x).abs().min(1.0);
            // stable small-angle form of acos(|n·x|)
            out.push(n.cross(&x).norm().atan2(c));
        }
    }
    Ok(out)
}
