//! Verification suites. Each check compares one measured quantity against a
//! default tolerance that the run configuration may override by name.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::catenoid::{self, CatenoidParams};
use crate::cone::{
    boundary_normal_angles, gradient_image, hausdorff_distance, herisson_surface, q1_positive_root,
    solve_one_phase, solve_pr2_cap, spectral_disk_check, verify_prop1, verify_prop2,
    AxisymmetricHarmonic, ConeDomain, CosTwoTheta, OnePhaseKind, Profile,
};
use crate::error::Result;
use crate::io::{Bound, VerificationReport};
use crate::numeric::{curvatures, find_root, integrate_path, LaurentPoly};
use crate::weierstrass::{BoundaryComponent, WeierstrassData};

/// Reference value of the aperture parameter, rounded to eight decimals.
pub const ALPHA_REFERENCE: f64 = 1.199_678_64;
/// Reference value of the boundary radius, rounded to six decimals.
pub const RADIUS_REFERENCE: f64 = 0.833_557;

const JET_STEP: f64 = 1e-3;

pub(crate) struct Checks<'a> {
    pub report: VerificationReport,
    overrides: &'a BTreeMap<String, f64>,
}

impl<'a> Checks<'a> {
    pub fn new(overrides: &'a BTreeMap<String, f64>) -> Self {
        Self {
            report: VerificationReport::new(),
            overrides,
        }
    }

    fn tol(&self, name: &str, default: f64) -> f64 {
        self.overrides.get(name).copied().unwrap_or(default)
    }

    fn upper(&mut self, name: &str, measured: f64, default: f64, provenance: &str) {
        let t = self.tol(name, default);
        self.report
            .check(name, measured, t, Bound::Upper, provenance);
    }

    fn lower(&mut self, name: &str, measured: f64, default: f64, provenance: &str) {
        let t = self.tol(name, default);
        self.report
            .check(name, measured, t, Bound::Lower, provenance);
    }
}

fn spread(xs: &[f64]) -> f64 {
    let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

fn max_abs(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(
        0.0f64,
        |m, x| if x.is_nan() { f64::NAN } else { m.max(x.abs()) },
    )
}

pub(crate) fn numeric_suite(c: &mut Checks) -> Result<()> {
    const P: &str = "numerical kernels";
    // d/dz of a Laurent polynomial against a central difference
    let p = LaurentPoly::from_terms([
        (-2, Complex64::new(0.3, -0.1)),
        (1, Complex64::new(1.0, 0.0)),
        (3, Complex64::new(0.0, 2.0)),
    ]);
    let dp = p.derivative();
    let z = Complex64::new(0.7, 0.4);
    let h = 1e-5;
    let fd = (p.eval(z + h)? - p.eval(z - h)?) / (2.0 * h);
    c.upper(
        "numeric.laurent_derivative",
        (fd - dp.eval(z)?).norm(),
        1e-8,
        P,
    );
    // the winding integral of 1/z
    let circle = crate::numeric::circle_polyline(1.0, 64);
    let w = integrate_path::<1, _>(|z: Complex64| Ok([z.inv()]), &circle, 16)?[0];
    c.upper(
        "numeric.winding_integral",
        (w - Complex64::new(0.0, 2.0 * PI)).norm(),
        1e-12,
        P,
    );
    let r = find_root(|x| x * x - 2.0, 0.0, 2.0, 1e-14)?;
    c.upper("numeric.root_sqrt2", (r - 2f64.sqrt()).abs(), 1e-14, P);
    Ok(())
}

pub(crate) fn critical_catenoid_suite(c: &mut Checks, grid_n: usize) -> Result<CatenoidParams> {
    let cat = catenoid::solve_critical()?;
    let (alpha, a) = (cat.alpha, cat.a);
    let printed = catenoid::printed_equation_root()?;
    for (name, v) in [
        ("alpha", alpha),
        ("neck_radius", a),
        ("boundary_radius", cat.boundary_radius()),
        ("boundary_height", cat.boundary_height()),
        ("normal_cone_aperture", catenoid::normal_cone_aperture(&cat)),
        ("printed_equation_root", printed),
    ] {
        c.report.constant(name, v);
    }

    const FB: &str = "free boundary conditions |p| = 1 and p·N = 0 on the boundary circle";
    let (r1, r2) = catenoid::critical_residual(a, alpha);
    c.upper("catenoid.sphere_residual", r1.abs(), 1e-10, FB);
    c.upper("catenoid.orthogonality_residual", r2.abs(), 1e-10, FB);
    c.upper(
        "catenoid.alpha_reference",
        (alpha - ALPHA_REFERENCE).abs(),
        1e-8,
        "aperture equation alpha tanh(alpha) = 1",
    );
    c.upper(
        "catenoid.aperture_equation",
        (alpha * alpha.tanh() - 1.0).abs(),
        1e-12,
        "aperture equation alpha tanh(alpha) = 1",
    );
    c.upper(
        "catenoid.neck_closed_form",
        (a - (alpha * alpha - 1.0).sqrt() / (alpha * alpha)).abs(),
        1e-10,
        "neck radius a = sqrt(alpha^2 - 1) / alpha^2",
    );
    c.upper(
        "catenoid.boundary_radius_identity",
        (cat.boundary_radius() - 1.0 / alpha)
            .abs()
            .max((1.0 / alpha - alpha.tanh()).abs()),
        1e-10,
        "boundary radius a cosh(alpha) = 1/alpha = tanh(alpha)",
    );
    c.upper(
        "catenoid.boundary_radius_reference",
        (1.0 / alpha - RADIUS_REFERENCE).abs(),
        5e-7,
        "boundary radius 0.833557 at its displayed precision",
    );

    const LEMMA: &str = "boundary curve curvature k = sqrt(1 - K)";
    let k_closed = 1.0 / cat.boundary_radius();
    let gk_closed = cat.gauss_curvature(alpha);
    c.upper(
        "lemma.closed_form",
        (k_closed - alpha)
            .abs()
            .max((gk_closed + alpha * alpha - 1.0).abs()),
        1e-10,
        LEMMA,
    );

    let wd = catenoid::to_weierstrass(&cat)?;
    let fb = wd.free_boundary_report(grid_n)?;
    const WFB: &str = "free boundary residuals of the Weierstrass immersion";
    c.upper("weierstrass.sphere", fb.sphere, 1e-8, WFB);
    c.upper("weierstrass.orthogonality", fb.orthogonality, 1e-8, WFB);
    c.upper("weierstrass.hopf_imaginary", fb.hopf_imag, 1e-8, WFB);
    c.upper("weierstrass.lambda_theta", fb.lambda_theta, 1e-8, WFB);

    let mut h_max = 0.0f64;
    for z in wd.interior_grid(grid_n) {
        let (r, t) = z.to_polar();
        let rec = curvatures(&wd.log_chart_jet(r.ln(), t, JET_STEP)?)?;
        h_max = max_abs([h_max, rec.h]);
    }
    c.upper(
        "weierstrass.mean_curvature",
        h_max,
        1e-6,
        "minimality of the immersion",
    );

    let hopf_ref = wd.hopf_quantity(wd.z_ref())?;
    let mut pts = wd.interior_grid(grid_n);
    pts.extend(wd.boundary_grid(BoundaryComponent::Inner, grid_n));
    pts.extend(wd.boundary_grid(BoundaryComponent::Outer, grid_n));
    let mut dev = 0.0f64;
    for z in &pts {
        dev = max_abs([dev, (wd.hopf_quantity(*z)? - hopf_ref).norm()]);
    }
    const HOPF: &str = "constancy of z^4 <u_zz, u_zz> on the annulus";
    c.upper("hopf.catenoid_constancy", dev, 1e-12, HOPF);
    c.upper(
        "hopf.catenoid_value",
        (hopf_ref - Complex64::new(a * a / 4.0, 0.0)).norm(),
        1e-12,
        HOPF,
    );
    let plane = WeierstrassData::plane(1.0, wd.rho())?;
    let mut plane_max = 0.0f64;
    for z in plane.interior_grid(8) {
        plane_max = max_abs([plane_max, plane.hopf_quantity(z)?.norm()]);
    }
    c.upper("hopf.plane_vanishes", plane_max, 0.0, HOPF);

    let mut lemma = 0.0f64;
    for comp in [BoundaryComponent::Inner, BoundaryComponent::Outer] {
        for z in wd.boundary_grid(comp, grid_n) {
            let k = wd.boundary_curvature(comp, z.arg())?;
            let target = (1.0 - wd.gauss_curvature(z)?).sqrt();
            lemma = max_abs([lemma, (k - target) / target]);
        }
    }
    c.upper("lemma.boundary_curvature", lemma, 1e-6, LEMMA);

    const AUT: &str = "invariance under annulus automorphisms z -> lambda z^(+-1)";
    let rot = wd.apply_schottky(Complex64::from_polar(1.0, 0.7), 1)?;
    let inv = wd.apply_schottky(Complex64::new(wd.rho(), 0.0), -1)?;
    c.upper(
        "schottky.rotation",
        rot.free_boundary_report(grid_n)?.max_residual(),
        1e-8,
        AUT,
    );
    c.upper(
        "schottky.inversion",
        inv.free_boundary_report(grid_n)?.max_residual(),
        1e-8,
        AUT,
    );
    Ok(cat)
}

pub(crate) fn one_phase_suite(c: &mut Checks) -> Result<()> {
    const DC: &str = "double cone solution of the one-phase problem";
    let cat = catenoid::solve_critical()?;
    let dc = solve_one_phase(OnePhaseKind::DoubleCone)?;
    let x1 = q1_positive_root()?;
    let theta1 = dc.domain.theta_lo;
    c.report.constant("double_cone.theta1", theta1);
    c.report.constant("double_cone.aperture", dc.aperture());
    c.report.constant("double_cone.c", dc.c);
    c.upper(
        "one_phase.q1_root",
        (x1 * x1.atanh() - 1.0).abs(),
        1e-10,
        DC,
    );
    c.upper("one_phase.cos_theta1", (theta1.cos() - x1).abs(), 1e-10, DC);
    c.upper(
        "one_phase.tanh_alpha",
        (theta1.cos() - cat.alpha.tanh()).abs(),
        1e-10,
        "duality of the cone boundary and the catenoid boundary normals",
    );
    c.upper(
        "one_phase.aperture_vs_catenoid",
        (dc.aperture() - catenoid::normal_cone_aperture(&cat)).abs(),
        1e-10,
        "duality of the cone boundary and the catenoid boundary normals",
    );
    c.upper(
        "one_phase.c_vs_neck",
        (dc.c - cat.a).abs(),
        1e-9,
        "gradient image scaling c = a",
    );
    let b = dc.boundary_check()?;
    c.upper("one_phase.double_cone_boundary_value", b.value, 1e-10, DC);
    c.upper(
        "one_phase.double_cone_boundary_gradient",
        b.gradient,
        1e-10,
        DC,
    );
    let inner = dc.domain.interior_thetas(64);
    let eig = inner
        .iter()
        .map(|t| dc.profile.eigen_residual(*t))
        .collect::<Result<Vec<_>>>()?;
    c.upper(
        "one_phase.double_cone_eigen_residual",
        max_abs(eig),
        1e-8,
        "spherical eigenvalue 2",
    );

    let hs = solve_one_phase(OnePhaseKind::HalfSpace)?;
    let hs_dev = (0..=64)
        .map(|k| {
            hs.gradient_norm(FRAC_PI_2 * k as f64 / 64.0)
                .map(|g| g - 1.0)
        })
        .collect::<Result<Vec<_>>>()?;
    c.upper(
        "one_phase.half_space_gradient",
        max_abs(hs_dev),
        1e-15,
        "half-space solution",
    );

    const CAP: &str = "cap solution with v = alpha |x| on the boundary";
    for (tag, alpha) in [("0", 0.0), ("0.5", 0.5), ("-0.3", -0.3)] {
        let cap = solve_pr2_cap(alpha)?;
        let b = cap.boundary_check()?;
        c.upper(&format!("cap[{tag}].boundary_value"), b.value, 1e-10, CAP);
        c.upper(
            &format!("cap[{tag}].boundary_gradient"),
            b.gradient,
            1e-10,
            CAP,
        );
        let angles = cap.boundary_gradient_angles(64)?;
        c.upper(
            &format!("cap[{tag}].angle_spread"),
            spread(&angles),
            1e-8,
            "fixed angle between x and ∇v(x) on the boundary",
        );
        c.upper(
            &format!("cap[{tag}].angle_value"),
            max_abs(angles.iter().map(|a| a - alpha.acos())),
            1e-10,
            "fixed angle between x and ∇v(x) on the boundary",
        );
    }
    Ok(())
}

/// Generic harmonic inputs paired with bands that avoid the poles.
pub fn generic_harmonic_inputs() -> Result<Vec<(String, AxisymmetricHarmonic, ConeDomain)>> {
    Ok(vec![
        (
            "generic_a".into(),
            AxisymmetricHarmonic::new(1.0, 0.5)?,
            ConeDomain::new(0.8, PI - 0.8)?,
        ),
        (
            "generic_b".into(),
            AxisymmetricHarmonic::new(-0.4, 2.0)?,
            ConeDomain::new(0.5, 1.4)?,
        ),
    ])
}

/// Matched point clouds of the double-cone gradient image and the critical
/// catenoid: `n` polar angles spanning the closed band and `n` azimuths.
pub fn bridge_clouds(n: usize) -> Result<(Vec<crate::numeric::Vec3>, Vec<crate::numeric::Vec3>)> {
    let cat = catenoid::solve_critical()?;
    let dc = solve_one_phase(OnePhaseKind::DoubleCone)?;
    let (lo, hi) = (dc.domain.theta_lo, dc.domain.theta_hi);
    let thetas: Vec<f64> = (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect();
    let phis: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
    let image = gradient_image(&dc.scaled_profile(), &thetas, &phis)?;
    let mut chart = Vec::with_capacity(n * n);
    for t in &thetas {
        // the image of polar angle theta is the catenoid parallel s = artanh(cos theta)
        let s = t.cos().atanh();
        for p in &phis {
            chart.push(cat.point(s, p + PI));
        }
    }
    Ok((image, chart))
}

pub(crate) fn herisson_suite(c: &mut Checks, grid_n: usize) -> Result<()> {
    let dc = solve_one_phase(OnePhaseKind::DoubleCone)?;
    let (image, chart) = bridge_clouds(grid_n)?;
    c.upper(
        "herisson.catenoid_hausdorff",
        hausdorff_distance(&image, &chart),
        1e-4,
        "gradient image of the double cone solution is the critical catenoid",
    );

    const P1: &str = "Gauss map of the gradient image inverts ∇v";
    const P1R: &str = "curvature radii of the gradient image sum to the Hessian trace";
    const P2: &str = "gradient image of a harmonic function is minimal";
    let mut inputs: Vec<(String, AxisymmetricHarmonic, ConeDomain)> =
        vec![("double_cone".into(), dc.scaled_profile(), dc.domain)];
    inputs.extend(generic_harmonic_inputs()?);
    for (tag, f, d) in &inputs {
        let grid = herisson_surface(f, d, grid_n, grid_n)?;
        let p1 = verify_prop1(&grid)?;
        let p2 = verify_prop2(&grid)?;
        c.upper(
            &format!("prop1[{tag}].normal_inversion"),
            p1.normal_deviation,
            1e-6,
            P1,
        );
        c.upper(
            &format!("prop1[{tag}].radii_vs_hessian"),
            p1.radii_mismatch,
            1e-4,
            P1R,
        );
        c.report.constant(
            &format!("prop1[{tag}].degenerate_samples"),
            p1.degenerate as f64,
        );
        c.upper(
            &format!("prop2[{tag}].mean_curvature"),
            p2.max_abs_h,
            1e-5,
            P2,
        );
    }
    let control = herisson_surface(&CosTwoTheta, &ConeDomain::new(0.3, 1.2)?, grid_n, grid_n)?;
    c.lower(
        "prop2[cos2theta].mean_curvature",
        verify_prop2(&control)?.max_abs_h,
        0.01,
        "non-harmonic control: the gradient image is not minimal",
    );

    const DUAL: &str = "boundary normals of the gradient image are the cone boundary directions";
    let angles = boundary_normal_angles(&dc.scaled_profile(), &dc.domain, grid_n)?;
    c.upper(
        "duality.normal_angle",
        max_abs(angles.iter().copied()),
        1e-6,
        DUAL,
    );
    c.upper("duality.angle_spread", spread(&angles), 1e-8, DUAL);
    Ok(())
}

pub(crate) fn spectral_suite(c: &mut Checks) -> Result<()> {
    const SP: &str = "geodesic disk solution with lambda = -2 kappa";
    let thetas = [("pi/6", PI / 6.0), ("pi/3", PI / 3.0), ("pi/2", FRAC_PI_2)];
    let mut betas = BTreeMap::new();
    for kappa in [1.0, 4.0] {
        for (tag, t0) in thetas {
            let r = spectral_disk_check(t0, kappa)?;
            let key = format!("spectral[k{kappa},{tag}]");
            c.upper(
                &format!("{key}.lambda"),
                (r.lambda + 2.0 * kappa).abs(),
                0.0,
                SP,
            );
            c.upper(&format!("{key}.pde_residual"), r.pde_residual, 1e-5, SP);
            c.upper(
                &format!("{key}.alpha"),
                (r.alpha_measured - t0.cos()).abs(),
                1e-10,
                SP,
            );
            c.upper(
                &format!("{key}.beta"),
                (r.beta_measured - kappa.sqrt() * t0.sin()).abs(),
                1e-8,
                SP,
            );
            c.upper(&format!("{key}.beta_spread"), r.beta_spread, 1e-8, SP);
            betas.insert((kappa as u32, tag), r.beta_measured);
        }
    }
    let homothety = thetas
        .iter()
        .map(|(tag, _)| betas[&(4, *tag)] - 2.0 * betas[&(1, *tag)])
        .collect::<Vec<_>>();
    c.upper(
        "spectral.homothety",
        max_abs(homothety),
        1e-8,
        "homothety of the sphere scales beta by sqrt(kappa)",
    );
    Ok(())
}

/// Profile of a one-phase solution sampled at `n` polar angles spanning the closed band.
pub fn one_phase_profile(kind: OnePhaseKind, n: usize) -> Result<Vec<[f64; 4]>> {
    let s = solve_one_phase(kind)?;
    let p = s.scaled_profile();
    let (lo, hi) = (s.domain.theta_lo, s.domain.theta_hi);
    (0..n)
        .map(|i| {
            let t = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            Ok([t, p.g(t)?, p.g_prime(t)?, s.gradient_norm(t)?])
        })
        .collect()
}
