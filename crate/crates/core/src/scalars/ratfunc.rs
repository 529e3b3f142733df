//! The rational function field Q(zeta_ell)(mu). Elements are kept reduced
//! (coprime numerator/denominator, monic denominator) so that equality is
//! structural equality.

use super::cyclotomic::CycField;
use super::poly::Poly;
use super::{EmbedPoint, Field, ScalarError};
use num::complex::Complex64;
use std::fmt::Write as _;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFn {
    pub n: Poly,
    pub d: Poly,
}

#[derive(Clone, Debug)]
pub struct FunField {
    pub(crate) cf: CycField,
}

impl FunField {
    pub fn new(ell: u32) -> Self {
        FunField { cf: CycField::new(ell) }
    }
    pub fn coeff_field(&self) -> &CycField {
        &self.cf
    }

    pub(crate) fn make(&self, n: Poly, d: Poly) -> RatFn {
        assert!(!d.is_zero(), "zero denominator");
        if n.is_zero() {
            return RatFn { n, d: Poly::one(&self.cf) };
        }
        let g = n.gcd(&d, &self.cf);
        let (mut n, mut d) = if g.deg() > 0 {
            (n.div_exact(&g, &self.cf), d.div_exact(&g, &self.cf))
        } else {
            (n, d)
        };
        if let Some(lead) = d.c.last() {
            if !self.cf.eq_el(lead, &self.cf.one()) {
                let li = self.cf.inv(lead).unwrap();
                n = n.scale(&li, &self.cf);
                d = d.scale(&li, &self.cf);
            }
        }
        RatFn { n, d }
    }

    pub fn from_poly(&self, p: Poly) -> RatFn {
        RatFn { n: p, d: Poly::one(&self.cf) }
    }

    /// mu^k for any integer k.
    pub fn mu_pow(&self, k: i64) -> RatFn {
        if k >= 0 {
            self.from_poly(Poly::monomial(self.cf.one(), k as usize, &self.cf))
        } else {
            RatFn {
                n: Poly::one(&self.cf),
                d: Poly::monomial(self.cf.one(), (-k) as usize, &self.cf),
            }
        }
    }

    /// Laurent-polynomial view: Some((min_exp, coefficients)) when the
    /// denominator is a monomial.
    pub fn as_laurent(&self, x: &RatFn) -> Option<(i64, Vec<super::CycEl>)> {
        if x.n.is_zero() {
            return Some((0, vec![]));
        }
        if !x.d.is_monomial(&self.cf) {
            return None;
        }
        let dv = x.d.valuation(&self.cf).unwrap();
        let lead = &x.d.c[dv];
        let li = self.cf.inv(lead).unwrap();
        let coeffs: Vec<_> = x.n.c.iter().map(|c| self.cf.mul(c, &li)).collect();
        Some((-(dv as i64), coeffs))
    }
}

impl Field for FunField {
    type El = RatFn;

    fn ell(&self) -> u32 {
        self.cf.ell()
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn zero(&self) -> RatFn {
        RatFn { n: Poly::zero(), d: Poly::one(&self.cf) }
    }
    fn one(&self) -> RatFn {
        self.from_poly(Poly::one(&self.cf))
    }
    fn from_i64(&self, n: i64) -> RatFn {
        self.from_poly(Poly::constant(self.cf.from_i64(n), &self.cf))
    }
    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        if a.n.is_zero() {
            return b.clone();
        }
        if b.n.is_zero() {
            return a.clone();
        }
        if a.d == b.d {
            return self.make(a.n.add(&b.n, &self.cf), a.d.clone());
        }
        let g = a.d.gcd(&b.d, &self.cf);
        let (da, db) = (a.d.div_exact(&g, &self.cf), b.d.div_exact(&g, &self.cf));
        let n = a.n.mul(&db, &self.cf).add(&b.n.mul(&da, &self.cf), &self.cf);
        let d = a.d.mul(&db, &self.cf);
        self.make(n, d)
    }
    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &RatFn) -> RatFn {
        RatFn { n: a.n.neg(&self.cf), d: a.d.clone() }
    }
    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        if a.n.is_zero() || b.n.is_zero() {
            return self.zero();
        }
        // cross-cancel to keep gcd inputs small
        let g1 = a.n.gcd(&b.d, &self.cf);
        let g2 = b.n.gcd(&a.d, &self.cf);
        let n1 = a.n.div_exact(&g1, &self.cf);
        let d2 = b.d.div_exact(&g1, &self.cf);
        let n2 = b.n.div_exact(&g2, &self.cf);
        let d1 = a.d.div_exact(&g2, &self.cf);
        let n = n1.mul(&n2, &self.cf);
        let d = d1.mul(&d2, &self.cf);
        // coprime by construction; just make monic
        let mut out = RatFn { n, d };
        if let Some(lead) = out.d.c.last() {
            if !self.cf.eq_el(lead, &self.cf.one()) {
                let li = self.cf.inv(lead).unwrap();
                out.n = out.n.scale(&li, &self.cf);
                out.d = out.d.scale(&li, &self.cf);
            }
        }
        out
    }
    fn inv(&self, a: &RatFn) -> Result<RatFn, ScalarError> {
        if a.n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.make(a.d.clone(), a.n.clone()))
    }
    fn is_zero(&self, a: &RatFn) -> bool {
        a.n.is_zero()
    }
    fn eq_el(&self, a: &RatFn, b: &RatFn) -> bool {
        a == b
    }
    fn zeta_pow(&self, k: i64) -> RatFn {
        self.from_poly(Poly::constant(self.cf.zeta_pow(k), &self.cf))
    }
    fn mu(&self) -> Option<RatFn> {
        Some(self.mu_pow(1))
    }
    fn embed(&self, a: &RatFn, at: &EmbedPoint) -> Result<Complex64, ScalarError> {
        let den = a.d.eval_complex(&self.cf, at.mu);
        if den.norm() < 1e-300 {
            return Err(ScalarError::EvalAtPole);
        }
        Ok(a.n.eval_complex(&self.cf, at.mu) / den)
    }
    fn render(&self, a: &RatFn) -> String {
        if let Some((min, coeffs)) = self.as_laurent(a) {
            if coeffs.is_empty() {
                return "0".into();
            }
            let mut out = String::new();
            let mut first = true;
            for (i, c) in coeffs.iter().enumerate().rev() {
                if self.cf.is_zero(c) {
                    continue;
                }
                let e = min + i as i64;
                let cs = self.cf.render(c);
                let (neg, mag) = match cs.strip_prefix('-') {
                    Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                    _ => (false, cs),
                };
                if first {
                    if neg {
                        out.push('-');
                    }
                    first = false;
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                let needs_coeff = mag != "1" || e == 0;
                let grouped =
                    mag.contains(['+', '-']) || (mag.contains('*') && e != 0);
                if needs_coeff {
                    if grouped {
                        let _ = write!(out, "({mag})");
                    } else {
                        out.push_str(&mag);
                    }
                }
                if e != 0 {
                    if needs_coeff {
                        out.push('*');
                    }
                    if e == 1 {
                        out.push_str("mu");
                    } else {
                        let _ = write!(out, "mu^{e}");
                    }
                }
            }
            return out;
        }
        let mut num = String::new();
        for (i, c) in a.n.c.iter().enumerate() {
            if self.cf.is_zero(c) {
                continue;
            }
            if !num.is_empty() {
                num.push_str(" + ");
            }
            let _ = write!(num, "({})*mu^{}", self.cf.render(c), i);
        }
        let mut den = String::new();
        for (i, c) in a.d.c.iter().enumerate() {
            if self.cf.is_zero(c) {
                continue;
            }
            if !den.is_empty() {
                den.push_str(" + ");
            }
            let _ = write!(den, "({})*mu^{}", self.cf.render(c), i);
        }
        format!("({num}) / ({den})")
    }
    fn ell_th_root(&self, a: &RatFn) -> Result<RatFn, ScalarError> {
        // monomial case: (c * mu^(k*ell))^(1/ell) = c^(1/ell) mu^k
        let ell = self.ell();
        if let Some((min, coeffs)) = self.as_laurent(a) {
            let nz: Vec<usize> =
                (0..coeffs.len()).filter(|&i| !self.cf.is_zero(&coeffs[i])).collect();
            if nz.len() == 1 {
                let e = min + nz[0] as i64;
                if e.rem_euclid(ell as i64) == 0 {
                    let root = self.cf.ell_th_root(&coeffs[nz[0]])?;
                    let m = self.mu_pow(e / ell as i64);
                    return Ok(self.mul(&self.from_poly(Poly::constant(root, &self.cf)), &m));
                }
            }
        }
        Err(ScalarError::RootUnavailable(ell))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_canonicalization() {
        // (mu^2 - 1)/(mu - 1) reduces to mu + 1
        let f = FunField::new(3);
        let cf = f.coeff_field().clone();
        let num = Poly { c: vec![cf.from_i64(-1), cf.zero(), cf.one()] };
        let den = Poly { c: vec![cf.from_i64(-1), cf.one()] };
        let x = f.make(num, den);
        let expect = f.add(&f.mu().unwrap(), &f.one());
        assert!(f.eq_el(&x, &expect));
    }

    #[test]
    fn laurent_inverse() {
        let f = FunField::new(3);
        let x = f.mu_pow(-3);
        let y = f.inv(&x).unwrap();
        assert!(f.eq_el(&y, &f.mu_pow(3)));
        assert!(f.eq_el(&f.mul(&x, &y), &f.one()));
    }

    #[test]
    fn embed_is_evaluation() {
        let f = FunField::new(3);
        // mu^2 + mu^-2 at mu = 1 is 2
        let x = f.add(&f.mu_pow(2), &f.mu_pow(-2));
        let v = f.embed(&x, &EmbedPoint::mu(Complex64::new(1.0, 0.0))).unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn render_laurent_descending() {
        let f = FunField::new(3);
        let x = f.add(&f.mu_pow(2), &f.add(&f.from_i64(7), &f.mu_pow(-2)));
        assert_eq!(f.render(&x), "mu^2 + 7 + mu^-2");
    }
}
