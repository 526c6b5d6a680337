//! The Legendre function of the second kind `Q_1` on `(-1, 1)`.

use crate::error::{Error, Result};
use crate::numeric::find_root;

fn check(x: f64) -> Result<()> {
    if x.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Q1 is singular for |x| >= 1, got x = {x}"
        )))
    }
}

/// `Q_1(x) = (x / 2) ln((1 + x) / (1 - x)) - 1 = x artanh(x) - 1`.
pub fn legendre_q1(x: f64) -> Result<f64> {
    check(x)?;
    // written in |x| so that evenness holds bit for bit
    let y = x.abs();
    Ok(y * y.atanh() - 1.0)
}

/// `Q_1'(x) = artanh(x) + x / (1 - x^2)`.
pub fn legendre_q1_prime(x: f64) -> Result<f64> {
    check(x)?;
    Ok(x.atanh() + x / (1.0 - x * x))
}

/// `Q_1''(x) = 2 / (1 - x^2)^2`.
pub fn legendre_q1_second(x: f64) -> Result<f64> {
    check(x)?;
    let w = 1.0 - x * x;
    Ok(2.0 / (w * w))
}

/// The positive zero of `Q_1`, i.e. the root of `x artanh(x) = 1`.
pub fn q1_positive_root() -> Result<f64> {
    find_root(|x| x * x.atanh() - 1.0, 0.5, 0.99, 1e-14)
}
