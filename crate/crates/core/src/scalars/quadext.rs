//! Quadratic extension of the function field by a root L of a monic degree-2
//! polynomial L^2 + p L + q over Q(zeta)(mu). Elements are a + b L; inversion
//! multiplies by the conjugate a + b(-p - L) and divides by the norm.

use super::ratfunc::{FunField, RatFn};
use super::{EmbedPoint, Field, ScalarError};
use num::complex::Complex64;

#[derive(Clone, PartialEq, Debug)]
pub struct QuadEl {
    pub a: RatFn,
    pub b: RatFn,
}

#[derive(Clone, Debug)]
pub struct QuadField {
    pub base: FunField,
    /// minimal polynomial L^2 + p L + q
    pub p: RatFn,
    pub q: RatFn,
}

impl QuadField {
    pub fn new(base: FunField, p: RatFn, q: RatFn) -> Self {
        QuadField { base, p, q }
    }

    pub fn lift(&self, a: RatFn) -> QuadEl {
        QuadEl { a, b: self.base.zero() }
    }
    pub fn from_parts(&self, a: RatFn, b: RatFn) -> QuadEl {
        QuadEl { a, b }
    }
    /// The base-field part, when the element has no L component.
    pub fn as_base(&self, x: &QuadEl) -> Option<RatFn> {
        if self.base.is_zero(&x.b) {
            Some(x.a.clone())
        } else {
            None
        }
    }
    /// Conjugate: sends L to the other root -p - L.
    pub fn conj(&self, x: &QuadEl) -> QuadEl {
        let f = &self.base;
        QuadEl { a: f.sub(&x.a, &f.mul(&x.b, &self.p)), b: f.neg(&x.b) }
    }
    /// Field norm x * conj(x) = a^2 - p a b + q b^2.
    pub fn norm(&self, x: &QuadEl) -> RatFn {
        let f = &self.base;
        let a2 = f.mul(&x.a, &x.a);
        let ab = f.mul(&x.a, &x.b);
        let b2 = f.mul(&x.b, &x.b);
        f.add(&f.sub(&a2, &f.mul(&self.p, &ab)), &f.mul(&self.q, &b2))
    }
}

impl Field for QuadField {
    type El = QuadEl;

    fn ell(&self) -> u32 {
        self.base.ell()
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn zero(&self) -> QuadEl {
        QuadEl { a: self.base.zero(), b: self.base.zero() }
    }
    fn one(&self) -> QuadEl {
        QuadEl { a: self.base.one(), b: self.base.zero() }
    }
    fn from_i64(&self, n: i64) -> QuadEl {
        QuadEl { a: self.base.from_i64(n), b: self.base.zero() }
    }
    fn add(&self, x: &QuadEl, y: &QuadEl) -> QuadEl {
        QuadEl { a: self.base.add(&x.a, &y.a), b: self.base.add(&x.b, &y.b) }
    }
    fn sub(&self, x: &QuadEl, y: &QuadEl) -> QuadEl {
        QuadEl { a: self.base.sub(&x.a, &y.a), b: self.base.sub(&x.b, &y.b) }
    }
    fn neg(&self, x: &QuadEl) -> QuadEl {
        QuadEl { a: self.base.neg(&x.a), b: self.base.neg(&x.b) }
    }
    fn mul(&self, x: &QuadEl, y: &QuadEl) -> QuadEl {
        // (a1 + b1 L)(a2 + b2 L) with L^2 = -p L - q
        let f = &self.base;
        let a1a2 = f.mul(&x.a, &y.a);
        let b1b2 = f.mul(&x.b, &y.b);
        let cross = f.add(&f.mul(&x.a, &y.b), &f.mul(&x.b, &y.a));
        QuadEl {
            a: f.sub(&a1a2, &f.mul(&self.q, &b1b2)),
            b: f.sub(&cross, &f.mul(&self.p, &b1b2)),
        }
    }
    fn inv(&self, x: &QuadEl) -> Result<QuadEl, ScalarError> {
        let n = self.norm(x);
        if self.base.is_zero(&n) {
            return Err(ScalarError::DivisionByZero);
        }
        let ninv = self.base.inv(&n)?;
        let c = self.conj(x);
        Ok(QuadEl { a: self.base.mul(&c.a, &ninv), b: self.base.mul(&c.b, &ninv) })
    }
    fn is_zero(&self, x: &QuadEl) -> bool {
        self.base.is_zero(&x.a) && self.base.is_zero(&x.b)
    }
    fn eq_el(&self, x: &QuadEl, y: &QuadEl) -> bool {
        x == y
    }
    fn zeta_pow(&self, k: i64) -> QuadEl {
        self.lift(self.base.zeta_pow(k))
    }
    fn mu(&self) -> Option<QuadEl> {
        Some(self.lift(self.base.mu().unwrap()))
    }
    fn ext_gen(&self) -> Option<QuadEl> {
        Some(QuadEl { a: self.base.zero(), b: self.base.one() })
    }
    fn embed(&self, x: &QuadEl, at: &EmbedPoint) -> Result<Complex64, ScalarError> {
        let l0 = at.l.ok_or(ScalarError::BackendMismatch(
            "quadratic extension needs an L value".into(),
        ))?;
        // the point must satisfy the minimal polynomial
        let pv = self.base.embed(&self.p, at)?;
        let qv = self.base.embed(&self.q, at)?;
        let resid = l0 * l0 + pv * l0 + qv;
        let scale = 1.0 + l0.norm() * l0.norm();
        if resid.norm() > 1e-6 * scale {
            return Err(ScalarError::OffCurve);
        }
        Ok(self.base.embed(&x.a, at)? + self.base.embed(&x.b, at)? * l0)
    }
    fn render(&self, x: &QuadEl) -> String {
        if self.base.is_zero(&x.b) {
            self.base.render(&x.a)
        } else if self.base.is_zero(&x.a) {
            format!("({}) * L", self.base.render(&x.b))
        } else {
            format!("({}) + ({}) * L", self.base.render(&x.a), self.base.render(&x.b))
        }
    }
    fn ell_th_root(&self, x: &QuadEl) -> Result<QuadEl, ScalarError> {
        if let Some(a) = self.as_base(x) {
            return Ok(self.lift(self.base.ell_th_root(&a)?));
        }
        Err(ScalarError::RootUnavailable(self.ell()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext_by_l2_minus_c(c: i64) -> QuadField {
        let base = FunField::new(3);
        let p = base.zero();
        let q = base.from_i64(-c);
        QuadField::new(base, p, q)
    }

    #[test]
    fn l_squared_reduces() {
        // extend by L^2 - 5: L*L = 5
        let f = ext_by_l2_minus_c(5);
        let l = f.ext_gen().unwrap();
        let l2 = f.mul(&l, &l);
        assert!(f.eq_el(&l2, &f.from_i64(5)));
    }

    #[test]
    fn conjugate_inverse_formula() {
        // minpoly L^2 + pL + q with p = 3, q = 7: inv(L) = (-L - 3)/7
        let base = FunField::new(3);
        let f = QuadField::new(base.clone(), base.from_i64(3), base.from_i64(7));
        let l = f.ext_gen().unwrap();
        let li = f.inv(&l).unwrap();
        let expect = f.from_parts(
            base.div(&base.from_i64(-3), &base.from_i64(7)).unwrap(),
            base.div(&base.from_i64(-1), &base.from_i64(7)).unwrap(),
        );
        assert!(f.eq_el(&li, &expect));
        assert!(f.eq_el(&f.mul(&l, &li), &f.one()));
    }
}
