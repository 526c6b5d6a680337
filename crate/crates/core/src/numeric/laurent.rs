//! Laurent polynomials with complex coefficients.
//!
//! Coefficients live in a sparse exponent map. Zero coefficients are never
//! stored, so `is_zero` and the exponent range are always exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, Complex64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: i32, coeff: Complex64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(0, c)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, Complex64)>,
    {
        let mut p = Self::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    /// Real-coefficient shorthand for tests and CLI data.
    pub fn from_real_terms(terms: &[(i32, f64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(n, c)| (n, Complex64::new(c, 0.0))))
    }

    fn add_term(&mut self, exponent: i32, coeff: Complex64) {
        let entry = self
            .coeffs
            .entry(exponent)
            .or_insert(Complex64::new(0.0, 0.0));
        *entry += coeff;
        if *entry == Complex64::new(0.0, 0.0) {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i32) -> Complex64 {
        self.coeffs.get(&exponent).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.coeffs.iter().map(|(&n, &c)| (n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn has_pole_at_origin(&self) -> bool {
        self.min_exponent().is_some_and(|n| n < 0)
    }

    /// Residue at the origin, i.e. the coefficient of `z^-1`.
    pub fn residue(&self) -> Complex64 {
        self.coeff(-1)
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z == Complex64::new(0.0, 0.0) {
            if self.has_pole_at_origin() {
                return Err(Error::Pole(z));
            }
            return Ok(self.coeff(0));
        }
        Ok(self.coeffs.iter().map(|(&n, &c)| c * z.powi(n)).sum())
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(&n, _)| n != 0)
                .map(|(&n, &c)| (n - 1, c * n as f64)),
        )
    }

    /// Coefficient-wise map, used for the `z -> lambda z^(+-1)` substitutions.
    pub fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(i32, Complex64) -> (i32, Complex64),
    {
        Self::from_terms(self.coeffs.iter().map(|(&n, &c)| f(n, c)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map_terms(|n, c| (n, c * s))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms().map(|(n, c)| (n, -c))))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .flat_map(|(n, a)| rhs.terms().map(move |(m, b)| (n + m, a * b))),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) z^{}", c, n)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_identity_monomial() {
        let p = LaurentPoly::from_real_terms(&[(1, 1.0)]);
        assert_eq!(p.eval(c(2.0, 0.0)).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn eval_inverse_square_at_i() {
        let p = LaurentPoly::from_real_terms(&[(-2, 1.0)]);
        let v = p.eval(c(0.0, 1.0)).unwrap();
        assert!((v - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn eval_mixed_sum() {
        let p = LaurentPoly::from_real_terms(&[(0, 3.0), (-1, 2.0)]);
        assert_eq!(p.eval(c(1.0, 0.0)).unwrap(), c(5.0, 0.0));
    }

    #[test]
    fn eval_at_origin() {
        let pole = LaurentPoly::from_real_terms(&[(-1, 1.0), (0, 2.0)]);
        assert_eq!(pole.eval(c(0.0, 0.0)), Err(Error::Pole(c(0.0, 0.0))));
        let regular = LaurentPoly::from_real_terms(&[(0, 2.0), (3, 1.0)]);
        assert_eq!(regular.eval(c(0.0, 0.0)).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn derivative_examples() {
        let d = LaurentPoly::from_real_terms(&[(1, 1.0)]).derivative();
        assert_eq!(d, LaurentPoly::from_real_terms(&[(0, 1.0)]));
        let d = LaurentPoly::from_real_terms(&[(-2, 1.0)]).derivative();
        assert_eq!(d, LaurentPoly::from_real_terms(&[(-3, -2.0)]));
        let d = LaurentPoly::constant(c(0.3, -4.0)).derivative();
        assert!(d.is_zero());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly::from_real_terms(&[(2, 1.0), (2, -1.0), (0, 0.0)]);
        assert!(p.is_zero());
        let a = LaurentPoly::from_real_terms(&[(1, 1.0)]);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_matches_pointwise() {
        let a = LaurentPoly::from_real_terms(&[(-2, 1.0), (1, 0.5)]);
        let b = LaurentPoly::from_terms([(1, c(0.0, 1.0)), (0, c(2.0, 0.0))]);
        let z = c(0.3, -0.7);
        let lhs = (&a * &b).eval(z).unwrap();
        let rhs = a.eval(z).unwrap() * b.eval(z).unwrap();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i32..=4, -2.0f64..2.0, -2.0f64..2.0), 1..6)
            .prop_map(|t| LaurentPoly::from_terms(t.into_iter().map(|(n, a, b)| (n, c(a, b)))))
    }

    proptest! {
        #[test]
        fn derivative_matches_central_difference(
            p in arb_poly(),
            r in 0.4f64..1.6,
            arg in -3.1f64..3.1,
        ) {
            let z = Complex64::from_polar(r, arg);
            let exact = p.derivative().eval(z).unwrap();
            let scale = p.terms().map(|(_, c)| c.norm()).sum::<f64>().max(1.0);
            for delta in [1e-4, 1e-5] {
                let d = c(delta, 0.0);
                let fd = (p.eval(z + d).unwrap() - p.eval(z - d).unwrap()) / (2.0 * delta);
                // |f'''|/6 stays below 2e4 * scale for |z| >= 0.4 and exponents in -4..=4
                prop_assert!((fd - exact).norm() <= scale * (1e5 * delta * delta + 1e-8));
            }
        }
    }
}
