//! Dense univariate polynomials over the cyclotomic field, the raw material
//! for the rational-function backends. Coefficients ascend; no trailing zeros.

use super::cyclotomic::{CycEl, CycField};
use super::Field;
use num::complex::Complex64;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly {
    pub c: Vec<CycEl>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: vec![] }
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }
    pub fn constant(x: CycEl, f: &CycField) -> Self {
        let mut p = Poly { c: vec![x] };
        p.trim(f);
        p
    }
    pub fn variable(f: &CycField) -> Self {
        Poly { c: vec![f.zero(), f.one()] }
    }
    /// c * x^k
    pub fn monomial(coef: CycEl, k: usize, f: &CycField) -> Self {
        if f.is_zero(&coef) {
            return Poly::zero();
        }
        let mut c = vec![f.zero(); k + 1];
        c[k] = coef;
        Poly { c }
    }
    pub fn one(f: &CycField) -> Self {
        Poly { c: vec![f.one()] }
    }

    fn trim(&mut self, f: &CycField) {
        while self.c.last().map_or(false, |x| f.is_zero(x)) {
            self.c.pop();
        }
    }

    /// Smallest exponent with nonzero coefficient; None for the zero poly.
    pub fn valuation(&self, f: &CycField) -> Option<usize> {
        self.c.iter().position(|x| !f.is_zero(x))
    }
    pub fn is_monomial(&self, f: &CycField) -> bool {
        self.valuation(f) == Some(self.c.len().saturating_sub(1)) && !self.is_zero()
    }

    pub fn add(&self, o: &Poly, f: &CycField) -> Poly {
        let mut c = vec![f.zero(); self.c.len().max(o.c.len())];
        for (i, x) in self.c.iter().enumerate() {
            c[i] = f.add(&c[i], x);
        }
        for (i, y) in o.c.iter().enumerate() {
            c[i] = f.add(&c[i], y);
        }
        let mut p = Poly { c };
        p.trim(f);
        p
    }
    pub fn sub(&self, o: &Poly, f: &CycField) -> Poly {
        self.add(&o.neg(f), f)
    }
    pub fn neg(&self, f: &CycField) -> Poly {
        Poly { c: self.c.iter().map(|x| f.neg(x)).collect() }
    }
    pub fn mul(&self, o: &Poly, f: &CycField) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![f.zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                c[i + j] = f.add(&c[i + j], &f.mul(x, y));
            }
        }
        let mut p = Poly { c };
        p.trim(f);
        p
    }
    pub fn scale(&self, k: &CycEl, f: &CycField) -> Poly {
        if f.is_zero(k) {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| f.mul(x, k)).collect() }
    }
    /// Multiply by x^k.
    pub fn shift(&self, k: usize, f: &CycField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![f.zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn divrem(&self, den: &Poly, f: &CycField) -> (Poly, Poly) {
        assert!(!den.is_zero(), "polynomial division by zero");
        let db = den.c.len() - 1;
        let mut rem = self.clone();
        rem.trim(f);
        if rem.c.len() <= db {
            return (Poly::zero(), rem);
        }
        let lead_inv = f.inv(&den.c[db]).expect("nonzero leading coefficient");
        let mut quot = vec![f.zero(); rem.c.len() - db];
        while rem.c.len() > db {
            let c = f.mul(rem.c.last().unwrap(), &lead_inv);
            let k = rem.c.len() - 1 - db;
            for j in 0..=db {
                let adj = f.mul(&c, &den.c[j]);
                rem.c[k + j] = f.sub(&rem.c[k + j], &adj);
            }
            quot[k] = c;
            rem.trim(f);
            if rem.is_zero() {
                break;
            }
        }
        let mut q = Poly { c: quot };
        q.trim(f);
        (q, rem)
    }

    pub fn div_exact(&self, den: &Poly, f: &CycField) -> Poly {
        let (q, r) = self.divrem(den, f);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd. Fast paths for the common monomial cases keep the
    /// commutative-coloring runs in pure Laurent arithmetic.
    pub fn gcd(&self, o: &Poly, f: &CycField) -> Poly {
        if self.is_zero() {
            return o.monic(f);
        }
        if o.is_zero() {
            return self.monic(f);
        }
        let va = self.valuation(f).unwrap();
        let vb = o.valuation(f).unwrap();
        if self.is_monomial(f) || o.is_monomial(f) {
            return Poly::monomial(f.one(), va.min(vb), f);
        }
        let common = va.min(vb);
        let mut a = Poly { c: self.c[va..].to_vec() };
        let mut b = Poly { c: o.c[vb..].to_vec() };
        // strip the content x^common, run monic Euclid on the rest
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, f);
            a = b;
            b = r.monic(f);
        }
        a.monic(f).shift(common, f)
    }

    pub fn monic(&self, f: &CycField) -> Poly {
        match self.c.last() {
            None => Poly::zero(),
            Some(l) if f.eq_el(l, &f.one()) => self.clone(),
            Some(l) => {
                let li = f.inv(l).unwrap();
                self.scale(&li, f)
            }
        }
    }

    pub fn eval_complex(&self, f: &CycField, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for co in self.c.iter().rev() {
            let cv = f
                .embed(co, &super::EmbedPoint::mu(Complex64::new(0.0, 0.0)))
                .unwrap_or(Complex64::new(f64::NAN, 0.0));
            acc = acc * x + cv;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_reduces_mu_squared_minus_one() {
        // (mu^2 - 1) and (mu - 1) share the factor (mu - 1)
        let f = CycField::new(3);
        let m1 = Poly { c: vec![f.from_i64(-1), f.one()] };
        let m2 = Poly { c: vec![f.from_i64(-1), f.zero(), f.one()] };
        let g = m2.gcd(&m1, &f);
        assert_eq!(g, m1);
        let q = m2.div_exact(&m1, &f);
        // mu + 1
        assert_eq!(q, Poly { c: vec![f.one(), f.one()] });
    }

    #[test]
    fn monomial_gcd_fast_path() {
        let f = CycField::new(3);
        let a = Poly::monomial(f.from_i64(4), 5, &f);
        let b = Poly { c: vec![f.zero(), f.zero(), f.one(), f.one()] };
        let g = a.gcd(&b, &f);
        assert_eq!(g, Poly::monomial(f.one(), 2, &f));
    }
}
