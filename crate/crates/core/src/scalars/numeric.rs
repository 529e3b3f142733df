//! Complex-double backend with a tolerance-based zero test.

use super::{EmbedPoint, Field, ScalarError};
use num::complex::Complex64;
use std::f64::consts::TAU;

#[derive(Clone, Debug)]
pub struct NumField {
    ell: u32,
    pub tol: f64,
}

impl NumField {
    pub fn new(ell: u32, tol: f64) -> Self {
        assert!(ell >= 3 && ell % 2 == 1);
        assert!(tol > 0.0);
        NumField { ell, tol }
    }
    pub fn from_complex(&self, z: Complex64) -> Complex64 {
        z
    }
}

impl Field for NumField {
    type El = Complex64;

    fn ell(&self) -> u32 {
        self.ell
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(&self, n: i64) -> Complex64 {
        Complex64::new(n as f64, 0.0)
    }
    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }
    fn sub(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a - b
    }
    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }
    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }
    fn inv(&self, a: &Complex64) -> Result<Complex64, ScalarError> {
        if self.is_zero(a) {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(1.0 / a)
    }
    fn is_zero(&self, a: &Complex64) -> bool {
        a.norm() <= self.tol
    }
    fn eq_el(&self, a: &Complex64, b: &Complex64) -> bool {
        (a - b).norm() <= self.tol * (1.0 + a.norm().max(b.norm()))
    }
    fn zeta_pow(&self, k: i64) -> Complex64 {
        Complex64::from_polar(1.0, TAU * k as f64 / self.ell as f64)
    }
    fn embed(&self, a: &Complex64, _at: &EmbedPoint) -> Result<Complex64, ScalarError> {
        Ok(*a)
    }
    fn render(&self, a: &Complex64) -> String {
        crate::scalars::render_complex(*a, 6)
    }
    fn ell_th_root(&self, a: &Complex64) -> Result<Complex64, ScalarError> {
        if self.is_zero(a) {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(a.powf(1.0 / self.ell as f64))
    }
    fn from_f64(&self, x: f64) -> Option<Complex64> {
        Some(Complex64::new(x, 0.0))
    }
    fn imaginary_unit(&self) -> Option<Complex64> {
        Some(Complex64::new(0.0, 1.0))
    }
}
