use super::{BoundaryComponent, WeierstrassData};
use crate::error::{Error, Result};

/// Maxima over both boundary circles of the free-boundary residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeBoundaryReport {
    pub grid: usize,
    /// `| |u| - 1 |`
    pub sphere: f64,
    /// `|u × u_r| / |u_r|`, zero when the surface meets the sphere orthogonally.
    pub orthogonality: f64,
    /// `|Im z^4 <u_zz^perp, u_zz^perp>|`
    pub hopf_imag: f64,
    /// `|d Lambda / d theta|`
    pub lambda_theta: f64,
}

impl FreeBoundaryReport {
    pub fn max_residual(&self) -> f64 {
        self.sphere
            .max(self.orthogonality)
            .max(self.hopf_imag)
            .max(self.lambda_theta)
    }

    pub fn is_free_boundary(&self, tol: f64) -> bool {
        self.max_residual() <= tol
    }
}

impl WeierstrassData {
    pub fn free_boundary_report(&self, n: usize) -> Result<FreeBoundaryReport> {
        if n < 8 {
            return Err(Error::Domain(format!(
                "boundary grid needs n >= 8, got {n}"
            )));
        }
        let mut report = FreeBoundaryReport {
            grid: n,
            sphere: 0.0,
            orthogonality: 0.0,
            hopf_imag: 0.0,
            lambda_theta: 0.0,
        };
        for component in [BoundaryComponent::Inner, BoundaryComponent::Outer] {
            for z in self.boundary_grid(component, n) {
                let u = self.surface_point(z)?;
                let u_r = self.radial_derivative(z)?;
                let ortho = if u_r.norm() > 0.0 {
                    u.cross(&u_r).norm() / u_r.norm()
                } else {
                    0.0
                };
                report.sphere = report.sphere.max((u.norm() - 1.0).abs());
                report.orthogonality = report.orthogonality.max(ortho);
                report.hopf_imag = report.hopf_imag.max(self.hopf_quantity(z)?.im.abs());
                report.lambda_theta = report.lambda_theta.max(self.metric_lambda_theta(z)?.abs());
            }
        }
        Ok(report)
    }
}
