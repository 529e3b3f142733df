//! Pluggable scalar fields: exact cyclotomic rationals, rational functions in
//! `mu` over the cyclotomic field, a quadratic extension of the function field,
//! and complex doubles.
//!
//! Every other module is generic over [`Field`]. Elements are plain data; all
//! arithmetic goes through the field object, which owns the context (the order
//! of the root of unity, the minimal polynomial of the extension, the numeric
//! tolerance).

mod cyclotomic;
mod numeric;
mod parse;
mod poly;
mod quadext;
mod ratfunc;

pub use cyclotomic::{CycEl, CycField};
pub use numeric::NumField;
pub use parse::parse_scalar;
pub use poly::Poly;
pub use quadext::{QuadEl, QuadField};
pub use ratfunc::{FunField, RatFn};

use num::complex::Complex64;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),
    #[error("minimal polynomial must be monic of degree 2")]
    BadMinimalPolynomial,
    #[error("evaluation at a pole of the denominator")]
    EvalAtPole,
    #[error("numeric point does not satisfy the minimal polynomial")]
    OffCurve,
    #[error("no {0}th root of the requested element is available in this field")]
    RootUnavailable(u32),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Numeric point at which symbolic elements are evaluated: `mu` goes to a
/// nonzero complex number, `L` (when the field is a quadratic extension) to a
/// root of the minimal polynomial over that point.
#[derive(Debug, Clone, Copy)]
pub struct EmbedPoint {
    pub mu: Complex64,
    pub l: Option<Complex64>,
}

impl EmbedPoint {
    pub fn mu(mu: Complex64) -> Self {
        EmbedPoint { mu, l: None }
    }
}

/// A scalar field with a distinguished primitive `ell`th root of unity.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type El: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn ell(&self) -> u32;
    fn is_exact(&self) -> bool;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn from_i64(&self, n: i64) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Result<Self::El, ScalarError>;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn eq_el(&self, a: &Self::El, b: &Self::El) -> bool;

    /// zeta^k for the field's primitive `ell`th root of unity.
    fn zeta_pow(&self, k: i64) -> Self::El;

    /// Evaluate at a numeric point; `zeta` goes to `exp(2 pi i / ell)`.
    fn embed(&self, a: &Self::El, at: &EmbedPoint) -> Result<Complex64, ScalarError>;

    /// Human-readable form, used by the CLI for symbolic output.
    fn render(&self, a: &Self::El) -> String;

    fn zeta(&self) -> Self::El {
        self.zeta_pow(1)
    }
    fn div(&self, a: &Self::El, b: &Self::El) -> Result<Self::El, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
    fn pow(&self, a: &Self::El, n: i64) -> Result<Self::El, ScalarError> {
        let base = if n < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }
    /// The transcendental `mu`, when the field has one.
    fn mu(&self) -> Option<Self::El> {
        None
    }
    /// The extension generator `L`, when the field is a quadratic extension.
    fn ext_gen(&self) -> Option<Self::El> {
        None
    }
    /// Best-effort exact `ell`th root, used to pick the diagonal scale of an
    /// irreducible representation. Numeric fields always succeed.
    fn ell_th_root(&self, a: &Self::El) -> Result<Self::El, ScalarError> {
        let _ = a;
        Err(ScalarError::RootUnavailable(self.ell()))
    }
    /// Only the numeric backend accepts floating-point literals.
    fn from_f64(&self, x: f64) -> Option<Self::El> {
        let _ = x;
        None
    }
    /// The imaginary unit, when the field contains one natively.
    fn imaginary_unit(&self) -> Option<Self::El> {
        None
    }
}

/// Complex number formatted to `sig` significant digits, in the style of the
/// twist-knot table: `162`, `168.986 - 54.5257i`.
pub fn render_complex(z: Complex64, sig: usize) -> String {
    let fmt = |x: f64| -> String {
        if x == 0.0 || !x.is_finite() {
            return if x == 0.0 { "0".into() } else { format!("{x}") };
        }
        let digits = (sig as i32 - 1 - x.abs().log10().floor() as i32).max(0) as usize;
        let s = format!("{:.*}", digits, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    let re = fmt(z.re);
    let im = z.im;
    if fmt(im) == "0" {
        return re;
    }
    let imag = fmt(im.abs());
    if re == "0" {
        return format!("{}{}i", if im < 0.0 { "-" } else { "" }, imag);
    }
    format!("{} {} {}i", re, if im < 0.0 { "-" } else { "+" }, imag)
}

/// Backend selector mirroring the runtime configuration surface.
#[derive(Debug, Clone, PartialEq)]
pub enum Backend {
    ExactCyclotomic,
    ExactFunctionField,
    /// Minimal polynomial `L^2 + p L + q` with `p`, `q` rational functions in
    /// `mu`, given as strings.
    ExactQuadraticExt { p: String, q: String },
    NumericComplex { tol: f64 },
}

/// Runtime description of a scalar field: the odd order of the root of unity
/// plus the backend. Validated on construction.
#[derive(Debug, Clone)]
pub struct FieldContext {
    pub ell: u32,
    pub backend: Backend,
}

impl FieldContext {
    pub fn new(ell: u32, backend: Backend) -> Result<Self, ScalarError> {
        if ell < 3 || ell % 2 == 0 {
            return Err(ScalarError::BackendMismatch(format!(
                "ell must be odd and >= 3, got {ell}"
            )));
        }
        if let Backend::NumericComplex { tol } = backend {
            if !(tol > 0.0) {
                return Err(ScalarError::BackendMismatch("tolerance must be positive".into()));
            }
        }
        Ok(FieldContext { ell, backend })
    }

    pub fn cyclotomic(ell: u32) -> Result<CycField, ScalarError> {
        FieldContext::new(ell, Backend::ExactCyclotomic)?;
        Ok(CycField::new(ell))
    }

    pub fn function_field(ell: u32) -> Result<FunField, ScalarError> {
        FieldContext::new(ell, Backend::ExactFunctionField)?;
        Ok(FunField::new(ell))
    }

    pub fn numeric(ell: u32, tol: f64) -> Result<NumField, ScalarError> {
        FieldContext::new(ell, Backend::NumericComplex { tol })?;
        Ok(NumField::new(ell, tol))
    }
}

/// Extend the function field by a root of the monic degree-2 polynomial
/// `L^2 + p L + q`. Inversion uses the conjugate trick.
pub fn quadratic_extend(base: &FunField, p: RatFn, q: RatFn) -> QuadField {
    QuadField::new(base.clone(), p, q)
}
