//! The catenoid `(a cosh s cos t, a cosh s sin t, a s)`, `|s| <= alpha`, and the
//! critical member of the family that meets the unit sphere orthogonally.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{find_root, LaurentPoly, Vec3};
use crate::weierstrass::WeierstrassData;

const ROOT_TOL: f64 = 1e-13;
const CRITICAL_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatenoidParams {
    /// Neck radius.
    pub a: f64,
    /// Half-range of the profile parameter `s`.
    pub alpha: f64,
}

impl CatenoidParams {
    pub fn new(a: f64, alpha: f64) -> Result<Self> {
        if !(a > 0.0 && alpha > 0.0 && a.is_finite() && alpha.is_finite()) {
            return Err(Error::Domain(format!(
                "catenoid needs a, alpha > 0 (a = {a}, alpha = {alpha})"
            )));
        }
        Ok(Self { a, alpha })
    }

    pub fn point(&self, s: f64, theta: f64) -> Vec3 {
        let r = self.a * s.cosh();
        Vec3::new(r * theta.cos(), r * theta.sin(), self.a * s)
    }

    /// `(cos t, sin t, -sinh s) / cosh s`; this is `-(p_s × p_t)` normalized.
    pub fn normal(&self, s: f64, theta: f64) -> Vec3 {
        Vec3::new(theta.cos(), theta.sin(), -s.sinh()) / s.cosh()
    }

    pub fn gauss_curvature(&self, s: f64) -> f64 {
        -1.0 / (self.a * self.a * s.cosh().powi(4))
    }

    /// Radius `a cosh(alpha)` of the two boundary circles.
    pub fn boundary_radius(&self) -> f64 {
        self.a * self.alpha.cosh()
    }

    /// Height `a alpha` of the upper boundary circle.
    pub fn boundary_height(&self) -> f64 {
        self.a * self.alpha
    }

    /// Point on the annulus `e^{-2 alpha} < |z| < 1` that `to_weierstrass`
    /// maps to `point(s, theta)`: `z = exp(-(s + alpha) + i theta)`.
    pub fn annulus_point(&self, s: f64, theta: f64) -> Complex64 {
        Complex64::new(-(s + self.alpha), theta).exp()
    }

    /// Inverse of `annulus_point`.
    pub fn chart_coordinates(&self, z: Complex64) -> (f64, f64) {
        let (r, t) = z.to_polar();
        (-(r.ln() + self.alpha), t)
    }
}

/// `(|p|^2 - 1, p · N)` at the boundary point `(s0, 0)` of the catenoid with neck `a`.
pub fn critical_residual(a: f64, s0: f64) -> (f64, f64) {
    let (c, s) = (s0.cosh(), s0.sinh());
    (a * a * (c * c + s0 * s0) - 1.0, a * c - a * s0 * s)
}

/// Neck radius for which the boundary circle at `s0` lies on the unit sphere.
fn neck_on_unit_sphere(s0: f64) -> f64 {
    1.0 / (s0.cosh().powi(2) + s0 * s0).sqrt()
}

/// The catenoid meeting the unit sphere orthogonally along both boundary circles.
///
/// The half-range `alpha` is the root of `p · N = 0` after fixing `a` by
/// `|p| = 1`; this is the equation `alpha tanh(alpha) = 1`.
pub fn solve_critical() -> Result<CatenoidParams> {
    let alpha = find_root(
        |s| critical_residual(neck_on_unit_sphere(s), s).1,
        1.0,
        2.0,
        ROOT_TOL,
    )?;
    let a = neck_on_unit_sphere(alpha);
    let (on_sphere, orthogonal) = critical_residual(a, alpha);
    if on_sphere.abs() > CRITICAL_RESIDUAL_TOL || orthogonal.abs() > CRITICAL_RESIDUAL_TOL {
        return Err(Error::Degenerate(format!(
            "critical catenoid residuals ({on_sphere:e}, {orthogonal:e}) above tolerance"
        )));
    }
    CatenoidParams::new(a, alpha)
}

/// Root of `sqrt(alpha) tanh(alpha) = 1`, the aperture equation in its
/// alternative printed form. Reported next to `solve_critical` for comparison.
pub fn printed_equation_root() -> Result<f64> {
    find_root(|x| x.sqrt() * x.tanh() - 1.0, 1.0, 2.0, ROOT_TOL)
}

/// Weierstrass data `mu = -a e^{-alpha} / z^2`, `nu = e^{alpha} z` on the annulus
/// `rho = e^{-2 alpha}`. The outer circle is the boundary `s = -alpha`, the inner
/// circle is `s = alpha`, and `surface_point(annulus_point(s, t)) = point(s, t)`.
pub fn to_weierstrass(c: &CatenoidParams) -> Result<WeierstrassData> {
    let e = c.alpha.exp();
    WeierstrassData::new(
        LaurentPoly::from_real_terms(&[(-2, -c.a / e)]),
        LaurentPoly::from_real_terms(&[(1, e)]),
        (-2.0 * c.alpha).exp(),
        c.point(-c.alpha, 0.0),
        Complex64::new(1.0, 0.0),
    )
}

/// Full opening angle of the cone of lines spanned by the normals along the
/// boundary circle `s = alpha`.
pub fn normal_cone_aperture(c: &CatenoidParams) -> f64 {
    2.0 * c.normal(c.alpha, 0.0).z.abs().acos()
}

/// Angles between the axis line and the normals at `n` points of each boundary circle.
pub fn boundary_normal_angles(c: &CatenoidParams, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * n);
    for s in [c.alpha, -c.alpha] {
        for k in 0..n {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            out.push(c.normal(s, t).z.abs().acos());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{curvatures, surface_jet};
    use crate::weierstrass::BoundaryComponent;
    use std::f64::consts::{PI, TAU};

    // 30-digit reference values of the critical catenoid
    const ALPHA: f64 = 1.199_678_640_257_733_8;
    const NECK: f64 = 0.460_485_088_250_133_9;
    const TANH_ALPHA: f64 = 0.833_556_559_600_964_7;
    const HEIGHT: f64 = 0.552_434_124_530_883_2;
    const APERTURE: f64 = 1.170_563_177_865_162_3;
    const PRINTED_ROOT: f64 = 1.326_259_018_628_190_3;

    fn spread(v: &[f64]) -> f64 {
        let max = v.iter().cloned().fold(f64::MIN, f64::max);
        let min = v.iter().cloned().fold(f64::MAX, f64::min);
        max - min
    }

    /// Deterministic low-discrepancy points in `[lo, hi]`.
    fn golden(k: usize, lo: f64, hi: f64) -> f64 {
        let g = 0.618_033_988_749_894_9;
        lo + (hi - lo) * ((k as f64 * g) % 1.0)
    }

    #[test]
    fn neck_point_and_normal() {
        let c = CatenoidParams::new(1.0, 1.0).unwrap();
        assert_eq!(c.point(0.0, 0.0), Vec3::new(1.0, 0.0, 0.0));
        assert_eq!(c.normal(0.0, 0.0), Vec3::new(1.0, 0.0, 0.0));
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(CatenoidParams::new(0.0, 1.0).is_err());
        assert!(CatenoidParams::new(1.0, -1.0).is_err());
    }

    #[test]
    fn chart_curvature_matches_closed_form() {
        let c = CatenoidParams::new(1.0, 2.0).unwrap();
        let jet = surface_jet(|s, t| Ok(c.point(s, t)), 0.0, 0.0, 1e-4).unwrap();
        let curv = curvatures(&jet).unwrap();
        assert!((curv.k - c.gauss_curvature(0.0)).abs() < 1e-5);
        assert!((c.gauss_curvature(0.0) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn chart_is_minimal_with_unit_normal() {
        let c = CatenoidParams::new(0.7, 1.5).unwrap();
        for k in 0..100 {
            let s = golden(k, -1.5, 1.5);
            let t = golden(k + 37, 0.0, TAU);
            let curv =
                curvatures(&surface_jet(|s, t| Ok(c.point(s, t)), s, t, 1e-3).unwrap()).unwrap();
            assert!(curv.h.abs() < 1e-6, "H = {} at ({s}, {t})", curv.h);
            assert!((curv.normal + c.normal(s, t)).norm() < 1e-8);
            assert!((c.normal(s, t).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn residual_examples() {
        let (_, r2) = critical_residual(1.0, 1.0);
        assert!((r2 - (-1.0f64).exp()).abs() < 1e-15);
        let s0 = 1.199_678_64;
        let a = (s0 * s0 - 1.0f64).sqrt() / (s0 * s0);
        let (r1, r2) = critical_residual(a, s0);
        assert!(r1.abs() < 1e-9 && r2.abs() < 1e-9, "{r1:e} {r2:e}");
    }

    #[test]
    fn orthogonality_is_the_aperture_equation() {
        // p · N = a cosh(s) (1 - s tanh s), so both vanish together
        for s in [0.5, 1.0, 1.3, 2.0] {
            let (_, r2) = critical_residual(1.0, s);
            assert!((r2 - s.cosh() * (1.0 - s * s.tanh())).abs() < 1e-13);
        }
    }

    #[test]
    fn critical_constants() {
        let c = solve_critical().unwrap();
        assert!((c.alpha - ALPHA).abs() < 1e-12);
        assert!((c.a - NECK).abs() < 1e-12);
        assert!((c.a - (ALPHA * ALPHA - 1.0).sqrt() / (ALPHA * ALPHA)).abs() < 1e-12);
        assert!((c.boundary_radius() - 1.0 / c.alpha).abs() < 1e-10);
        assert!((c.boundary_radius() - c.alpha.tanh()).abs() < 1e-10);
        assert!((c.alpha.tanh() - TANH_ALPHA).abs() < 1e-12);
        assert!((c.boundary_height() - HEIGHT).abs() < 1e-12);
        let (r1, r2) = critical_residual(c.a, c.alpha);
        assert!(r1.abs() <= 1e-10 && r2.abs() <= 1e-10);
    }

    #[test]
    fn closed_form_boundary_lemma() {
        let c = solve_critical().unwrap();
        let k_gauss = c.gauss_curvature(c.alpha);
        assert!((k_gauss + (c.alpha * c.alpha - 1.0)).abs() < 1e-12);
        let k_curve = 1.0 / c.boundary_radius();
        assert!((k_curve - c.alpha).abs() < 1e-10);
        assert!((k_curve - (1.0 - k_gauss).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn printed_equation_has_a_different_root() {
        let r = printed_equation_root().unwrap();
        assert!((r - PRINTED_ROOT).abs() < 1e-12);
        assert!((r - ALPHA).abs() > 0.1);
    }

    #[test]
    fn weierstrass_data_reproduces_chart() {
        let c = solve_critical().unwrap();
        let d = to_weierstrass(&c).unwrap();
        assert!((d.rho() - (-2.0 * c.alpha).exp()).abs() < 1e-16);
        for i in 0..20 {
            let s = -c.alpha + 2.0 * c.alpha * i as f64 / 19.0;
            for j in 0..20 {
                let t = TAU * j as f64 / 20.0;
                let z = c.annulus_point(s, t);
                let u = d.surface_point(z).unwrap();
                assert!((u - c.point(s, t)).norm() < 1e-8, "({s}, {t})");
                let (s2, t2) = c.chart_coordinates(z);
                assert!((s2 - s).abs() < 1e-12);
                assert!(((t2 - t).rem_euclid(TAU)).min((t - t2).rem_euclid(TAU)) < 1e-12);
            }
        }
    }

    #[test]
    fn weierstrass_data_is_free_boundary() {
        let c = solve_critical().unwrap();
        let d = to_weierstrass(&c).unwrap();
        let report = d.free_boundary_report(64).unwrap();
        assert!(report.is_free_boundary(1e-8), "{report:?}");
        for z in d.boundary_grid(BoundaryComponent::Inner, 32) {
            assert!(d.hopf_quantity(z).unwrap().im.abs() <= 1e-10);
        }
    }

    #[test]
    fn hopf_constant_and_neck_normal() {
        let c = solve_critical().unwrap();
        let d = to_weierstrass(&c).unwrap();
        for z in d.interior_grid(12) {
            let q = d.hopf_quantity(z).unwrap();
            assert!((q - Complex64::new(c.a * c.a / 4.0, 0.0)).norm() < 1e-14);
        }
        let neck = d.gauss_map(c.annulus_point(0.0, 0.0));
        assert!((neck - Vec3::new(1.0, 0.0, 0.0)).norm() < 1e-15);
        for (s, t) in [(0.3, 1.0), (-1.1, 4.0)] {
            assert!((d.gauss_map(c.annulus_point(s, t)) - c.normal(s, t)).norm() < 1e-14);
        }
    }

    #[test]
    fn boundary_curve_curvature_is_alpha() {
        let c = solve_critical().unwrap();
        let d = to_weierstrass(&c).unwrap();
        for comp in [BoundaryComponent::Inner, BoundaryComponent::Outer] {
            for k in 0..32 {
                let t = TAU * k as f64 / 32.0;
                let kappa = d.boundary_curvature(comp, t).unwrap();
                assert!((kappa - c.alpha).abs() < 1e-10);
                let z = Complex64::from_polar(d.radius(comp), t);
                let lemma = (1.0 - d.gauss_curvature(z).unwrap()).sqrt();
                assert!((kappa - lemma).abs() <= 1e-6 * lemma);
            }
        }
    }

    #[test]
    fn aperture_of_boundary_normals() {
        let c = solve_critical().unwrap();
        let aperture = normal_cone_aperture(&c);
        assert!((aperture - APERTURE).abs() < 1e-12);
        assert!((aperture - 2.0 * c.alpha.tanh().acos()).abs() < 1e-12);
        let angles = boundary_normal_angles(&c, 64);
        assert!(spread(&angles) <= 1e-10);
        assert!((angles[0] - TANH_ALPHA.acos()).abs() < 1e-12);
    }

    #[test]
    fn boundary_normals_are_antipodally_symmetric() {
        let c = solve_critical().unwrap();
        for k in 0..64 {
            let t = TAU * k as f64 / 64.0;
            let upper = c.normal(c.alpha, t);
            let lower = c.normal(-c.alpha, t + PI);
            assert!((upper + lower).norm() <= 1e-10);
        }
    }
}
