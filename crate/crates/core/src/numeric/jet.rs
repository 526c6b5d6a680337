//! Second-order jets of parametrized surfaces and their curvatures.
//!
//! Derivatives use the fourth-order central stencils that fit in a centered
//! 5×5 grid. The unit normal is `p_s × p_t` normalized, so the sign of `H`
//! and of the principal curvatures follows the chart orientation.

use nalgebra::Vector3;

use crate::error::{non_finite, Error, Result};

pub type Vec3 = Vector3<f64>;

pub const DEFAULT_STEP: f64 = 1e-4;

/// Metric determinants at or below this are treated as singular.
pub const METRIC_EPS: f64 = 1e-20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet {
    pub p: Vec3,
    pub p_s: Vec3,
    pub p_t: Vec3,
    pub p_ss: Vec3,
    pub p_st: Vec3,
    pub p_tt: Vec3,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureRecord {
    /// Gaussian curvature.
    pub k: f64,
    /// Mean curvature, `(kappa1 + kappa2) / 2`.
    pub h: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub normal: Vec3,
}

const D1: [(i32, f64); 4] = [
    (-2, 1.0 / 12.0),
    (-1, -8.0 / 12.0),
    (1, 8.0 / 12.0),
    (2, -1.0 / 12.0),
];
const D2: [(i32, f64); 5] = [
    (-2, -1.0 / 12.0),
    (-1, 16.0 / 12.0),
    (0, -30.0 / 12.0),
    (1, 16.0 / 12.0),
    (2, -1.0 / 12.0),
];

/// Samples `surface` on the 5×5 stencil around `(s, t)` and returns its jet.
pub fn surface_jet<F>(surface: F, s: f64, t: f64, h: f64) -> Result<SurfaceJet>
where
    F: Fn(f64, f64) -> Result<Vec3>,
{
    if !(h > 0.0) {
        return Err(Error::Domain(format!("jet step must be positive, got {h}")));
    }
    let mut grid = [[Vec3::zeros(); 5]; 5];
    for (i, row) in grid.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let di = i as i32 - 2;
            let dj = j as i32 - 2;
            let v = surface(s + di as f64 * h, t + dj as f64 * h)?;
            if !v.iter().all(|x| x.is_finite()) {
                return Err(non_finite(format!(
                    "surface at ({}, {})",
                    s + di as f64 * h,
                    t + dj as f64 * h
                )));
            }
            *cell = v;
        }
    }
    Ok(jet_from_stencil(&grid, h))
}

fn at(grid: &[[Vec3; 5]; 5], di: i32, dj: i32) -> Vec3 {
    grid[(di + 2) as usize][(dj + 2) as usize]
}

fn jet_from_stencil(grid: &[[Vec3; 5]; 5], h: f64) -> SurfaceJet {
    let p = at(grid, 0, 0);
    let p_s = D1.iter().map(|&(k, w)| at(grid, k, 0) * w).sum::<Vec3>() / h;
    let p_t = D1.iter().map(|&(k, w)| at(grid, 0, k) * w).sum::<Vec3>() / h;
    let p_ss = D2.iter().map(|&(k, w)| at(grid, k, 0) * w).sum::<Vec3>() / (h * h);
    let p_tt = D2.iter().map(|&(k, w)| at(grid, 0, k) * w).sum::<Vec3>() / (h * h);
    let mut p_st = Vec3::zeros();
    for &(i, wi) in &D1 {
        for &(j, wj) in &D1 {
            p_st += at(grid, i, j) * (wi * wj);
        }
    }
    p_st /= h * h;
    SurfaceJet {
        p,
        p_s,
        p_t,
        p_ss,
        p_st,
        p_tt,
        h,
    }
}

impl SurfaceJet {
    /// First fundamental form `(E, F, G)`.
    pub fn first_form(&self) -> (f64, f64, f64) {
        (
            self.p_s.dot(&self.p_s),
            self.p_s.dot(&self.p_t),
            self.p_t.dot(&self.p_t),
        )
    }

    pub fn metric_det(&self) -> f64 {
        let (e, f, g) = self.first_form();
        e * g - f * f
    }
}

pub fn curvatures(jet: &SurfaceJet) -> Result<CurvatureRecord> {
    let (e, f, g) = jet.first_form();
    let det = e * g - f * f;
    if !(det > METRIC_EPS) || det <= 1e-14 * e * g {
        return Err(Error::Degenerate(format!(
            "metric determinant {det:e} (E = {e:e}, G = {g:e})"
        )));
    }
    let cross = jet.p_s.cross(&jet.p_t);
    let normal = cross / cross.norm();
    let l = jet.p_ss.dot(&normal);
    let m = jet.p_st.dot(&normal);
    let n = jet.p_tt.dot(&normal);
    let k = (l * n - m * m) / det;
    let h = (e * n - 2.0 * f * m + g * l) / (2.0 * det);
    let disc = (h * h - k).max(0.0).sqrt();
    Ok(CurvatureRecord {
        k,
        h,
        kappa1: h + disc,
        kappa2: h - disc,
        normal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn plane(s: f64, t: f64) -> Result<Vec3> {
        Ok(Vec3::new(s, t, 0.0))
    }

    fn sphere(theta: f64, phi: f64) -> Vec3 {
        Vec3::new(
            theta.sin() * phi.cos(),
            theta.sin() * phi.sin(),
            theta.cos(),
        )
    }

    type Chart = dyn Fn(f64, f64) -> Result<Vec3>;

    fn catenoid(s: f64, theta: f64) -> Result<Vec3> {
        Ok(Vec3::new(s.cosh() * theta.cos(), s.cosh() * theta.sin(), s))
    }

    #[test]
    fn plane_jet() {
        let jet = surface_jet(plane, 0.3, -0.2, 1e-3).unwrap();
        assert!((jet.p_s - Vec3::new(1.0, 0.0, 0.0)).norm() < 1e-12);
        assert!(jet.p_tt.norm() < 1e-9);
        let c = curvatures(&jet).unwrap();
        assert!(c.k.abs() < 1e-10 && c.h.abs() < 1e-10);
    }

    #[test]
    fn sphere_chart_derivative() {
        let jet = surface_jet(|th, ph| Ok(sphere(th, ph)), FRAC_PI_2, 0.0, 1e-4).unwrap();
        assert!((jet.p_s - Vec3::new(0.0, 0.0, -1.0)).norm() < 1e-8);
    }

    #[test]
    fn sphere_with_inward_normal() {
        // (phi, theta) ordering makes p_s x p_t point inward, giving H = +1
        let jet = surface_jet(|ph, th| Ok(sphere(th, ph)), 0.4, 1.1, 1e-4).unwrap();
        let c = curvatures(&jet).unwrap();
        assert!((c.k - 1.0).abs() < 1e-6, "K = {}", c.k);
        assert!((c.h - 1.0).abs() < 1e-6, "H = {}", c.h);
        assert!((c.normal + sphere(1.1, 0.4)).norm() < 1e-8);
        assert!((c.normal.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn catenoid_neck() {
        let jet = surface_jet(catenoid, 0.0, 0.0, 1e-4).unwrap();
        assert!((jet.p_ss - Vec3::new(1.0, 0.0, 0.0)).norm() < 1e-6);
        let c = curvatures(&jet).unwrap();
        assert!(c.h.abs() < 1e-6);
        assert!((c.k + 1.0).abs() < 1e-5);
    }

    #[test]
    fn principal_curvatures_are_consistent() {
        let surfaces: Vec<Box<Chart>> = vec![
            Box::new(|s, t| Ok(Vec3::new(s, t, 0.3 * s * s - 0.7 * t * t + s * t))),
            Box::new(catenoid),
            Box::new(|ph, th| Ok(sphere(th, ph) * 2.0)),
            Box::new(|s, t| {
                Ok(Vec3::new(
                    (2.0 + t.cos()) * s.cos(),
                    (2.0 + t.cos()) * s.sin(),
                    t.sin(),
                ))
            }),
        ];
        for f in &surfaces {
            for &(s, t) in &[(0.2, 0.7), (-0.5, 1.3), (1.0, -0.4)] {
                let c = curvatures(&surface_jet(f, s, t, 1e-3).unwrap()).unwrap();
                let scale = c.kappa1.abs().max(c.kappa2.abs()).max(1e-300);
                assert!((c.kappa1 * c.kappa2 - c.k).abs() <= 1e-9 * scale * scale);
                assert!((c.kappa1 + c.kappa2 - 2.0 * c.h).abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn degenerate_metric_is_rejected() {
        let jet = surface_jet(|s, _t| Ok(Vec3::new(s, 0.0, 0.0)), 0.0, 0.0, 1e-3).unwrap();
        assert!(matches!(curvatures(&jet), Err(Error::Degenerate(_))));
    }

    #[test]
    fn non_finite_samples_are_rejected() {
        let err = surface_jet(|s, t| Ok(Vec3::new(s, t, s.ln())), 0.0, 0.0, 1e-3).unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }
}
