//! Reparametrization by conformal automorphisms `w = lambda z^(+-1)` of the annulus.
//!
//! For `w = lambda z` the pulled-back data are `mu(w / lambda) / lambda` and
//! `nu(w / lambda)`; for `w = lambda / z` they are `-lambda mu(lambda / w) / w^2`
//! and `nu(lambda / w)`. Both follow from `Phi~(w) dw = Phi(z) dz`.

use num_complex::Complex64;

use super::WeierstrassData;
use crate::error::{Error, Result};

const MODULUS_TOL: f64 = 1e-12;

impl WeierstrassData {
    pub fn apply_schottky(&self, lambda: Complex64, sign: i32) -> Result<Self> {
        let modulus = lambda.norm();
        let (mu, nu, z_ref) = match sign {
            1 => {
                if (modulus - 1.0).abs() > MODULUS_TOL {
                    return Err(Error::Representation(format!(
                        "rotation z -> lambda z needs |lambda| = 1, got {modulus}"
                    )));
                }
                let inv = lambda.inv();
                (
                    self.mu.map_terms(|n, c| (n, c * inv.powi(n + 1))),
                    self.nu.map_terms(|n, c| (n, c * inv.powi(n))),
                    lambda * self.z_ref,
                )
            }
            -1 => {
                if (modulus - self.rho).abs() > MODULUS_TOL * self.rho {
                    return Err(Error::Representation(format!(
                        "inversion z -> lambda / z needs |lambda| = rho = {}, got {modulus}",
                        self.rho
                    )));
                }
                (
                    self.mu.map_terms(|n, c| (-n - 2, -c * lambda.powi(n + 1))),
                    self.nu.map_terms(|n, c| (-n, c * lambda.powi(n))),
                    lambda / self.z_ref,
                )
            }
            other => {
                return Err(Error::Representation(format!(
                    "automorphism exponent must be +1 or -1, got {other}"
                )))
            }
        };
        // keep the basepoint inside the closed annulus despite rounding
        let r = z_ref.norm().clamp(self.rho, 1.0);
        let z_ref = Complex64::from_polar(r, z_ref.arg());
        WeierstrassData::new(mu, nu, self.rho, self.u0, z_ref)
    }
}
