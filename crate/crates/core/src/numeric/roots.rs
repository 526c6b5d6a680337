//! Bracketing scalar root finder: bisection followed by a short Newton polish.

use crate::error::{non_finite, Error, Result};

const NEWTON_POLISH_STEPS: usize = 3;
const MAX_BISECTIONS: usize = 2000;

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(non_finite(format!("root function at x = {x}")))
    }
}

/// Finds a root of `f` in `[lo, hi]`.
///
/// Bisection runs until the bracket is no wider than `tol`; then up to three
/// Newton steps with a centered numeric derivative refine the midpoint. A
/// Newton step is kept only if it stays inside the final bracket and lowers
/// `|f|`, so the returned value always lies in the last bisection bracket.
pub fn find_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!(
            "find_root needs finite bounds and tol > 0 (lo = {lo}, hi = {hi}, tol = {tol})"
        )));
    }
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = eval(&f, a)?;
    let fb = eval(&f, b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket {
            lo: a,
            hi: b,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut iterations = 0;
    while b - a > tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            // bracket is down to adjacent floats
            break;
        }
        let fm = eval(&f, mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        iterations += 1;
    }

    let mut x = 0.5 * (a + b);
    let mut fx = eval(&f, x)?;
    let h = ((b - a) * 1e-3).max(f64::EPSILON * x.abs().max(1.0) * 64.0);
    for _ in 0..NEWTON_POLISH_STEPS {
        let slope = (eval(&f, x + h)? - eval(&f, x - h)?) / (2.0 * h);
        if slope == 0.0 || !slope.is_finite() {
            break;
        }
        let candidate = x - fx / slope;
        if !(a..=b).contains(&candidate) {
            break;
        }
        let fc = eval(&f, candidate)?;
        if fc.abs() >= fx.abs() {
            break;
        }
        x = candidate;
        fx = fc;
    }
    Ok(x)
}
