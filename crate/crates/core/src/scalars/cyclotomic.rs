//! The cyclotomic field Q(zeta_ell), represented as Q[x] modulo the `ell`th
//! cyclotomic polynomial. Reducing modulo Phi_ell (degree ell-1) rather than
//! x^ell - 1 makes the representation canonical, so zero-testing is
//! coefficient equality.

use super::{EmbedPoint, Field, ScalarError};
use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::f64::consts::TAU;
use std::fmt::Write as _;

/// Element of Q(zeta_ell): coefficient vector of length ell-1 over Q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycEl {
    pub(crate) c: Vec<BigRational>,
}

#[derive(Clone, Debug)]
pub struct CycField {
    ell: u32,
    /// Coefficients of Phi_ell, monic, degree ell-1. Entries are small ints.
    phi: Vec<BigInt>,
}

/// Cyclotomic polynomial Phi_n as integer coefficients (ascending).
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        // den is monic in every use here
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let idx = i - dd + j;
            rem[idx] = &rem[idx] - &c * dj;
        }
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()));
    quot
}

impl CycField {
    pub fn new(ell: u32) -> Self {
        assert!(ell >= 3 && ell % 2 == 1, "ell must be odd and >= 3");
        CycField { ell, phi: cyclotomic_poly(ell) }
    }

    fn dim(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduce a coefficient vector of arbitrary length modulo Phi_ell.
    pub(crate) fn reduce(&self, mut v: Vec<BigRational>) -> CycEl {
        let d = self.dim();
        while v.len() > d {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = v.len() - d;
            for j in 0..d {
                let adj = &top * BigRational::from(self.phi[j].clone());
                v[k + j] -= adj;
            }
        }
        v.resize(d, BigRational::zero());
        CycEl { c: v }
    }

    pub fn from_rational(&self, r: BigRational) -> CycEl {
        let mut c = vec![BigRational::zero(); self.dim()];
        c[0] = r;
        CycEl { c }
    }

    pub fn as_rational(&self, a: &CycEl) -> Option<BigRational> {
        if a.c[1..].iter().all(|x| x.is_zero()) {
            Some(a.c[0].clone())
        } else {
            None
        }
    }
}

impl Field for CycField {
    type El = CycEl;

    fn ell(&self) -> u32 {
        self.ell
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn zero(&self) -> CycEl {
        CycEl { c: vec![BigRational::zero(); self.dim()] }
    }
    fn one(&self) -> CycEl {
        self.from_i64(1)
    }
    fn from_i64(&self, n: i64) -> CycEl {
        self.from_rational(BigRational::from(BigInt::from(n)))
    }
    fn add(&self, a: &CycEl, b: &CycEl) -> CycEl {
        CycEl { c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect() }
    }
    fn sub(&self, a: &CycEl, b: &CycEl) -> CycEl {
        CycEl { c: a.c.iter().zip(&b.c).map(|(x, y)| x - y).collect() }
    }
    fn neg(&self, a: &CycEl) -> CycEl {
        CycEl { c: a.c.iter().map(|x| -x).collect() }
    }
    fn mul(&self, a: &CycEl, b: &CycEl) -> CycEl {
        let d = self.dim();
        let mut v = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                v[i + j] += x * y;
            }
        }
        self.reduce(v)
    }
    fn inv(&self, a: &CycEl) -> Result<CycEl, ScalarError> {
        if self.is_zero(a) {
            return Err(ScalarError::DivisionByZero);
        }
        // Extended Euclid in Q[x] against Phi_ell.
        let phi: Vec<BigRational> =
            self.phi.iter().map(|z| BigRational::from(z.clone())).collect();
        let mut r0 = phi;
        let mut r1 = a.c.clone();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd = nonzero constant (Phi_ell is irreducible over Q)
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
        Ok(self.reduce(inv))
    }
    fn is_zero(&self, a: &CycEl) -> bool {
        a.c.iter().all(|x| x.is_zero())
    }
    fn eq_el(&self, a: &CycEl, b: &CycEl) -> bool {
        a == b
    }
    fn zeta_pow(&self, k: i64) -> CycEl {
        let e = k.rem_euclid(self.ell as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        self.reduce(v)
    }
    fn embed(&self, a: &CycEl, _at: &EmbedPoint) -> Result<Complex64, ScalarError> {
        let z = Complex64::from_polar(1.0, TAU / self.ell as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zp = Complex64::new(1.0, 0.0);
        for x in &a.c {
            acc += zp * rat_to_f64(x);
            zp *= z;
        }
        Ok(acc)
    }
    fn render(&self, a: &CycEl) -> String {
        let mut out = String::new();
        let mut first = true;
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                out.push_str(if x.is_negative() { " - " } else { " + " });
            } else if x.is_negative() {
                out.push('-');
            }
            first = false;
            let m = x.abs();
            if i == 0 {
                let _ = write!(out, "{m}");
            } else {
                if !m.is_one() {
                    let _ = write!(out, "{m}*");
                }
                if i == 1 {
                    out.push_str("zeta");
                } else {
                    let _ = write!(out, "zeta^{i}");
                }
            }
        }
        if first {
            out.push('0');
        }
        out
    }
    fn ell_th_root(&self, a: &CycEl) -> Result<CycEl, ScalarError> {
        // Handles rational values with an exact rational ell-th root, plus
        // roots of unity. Enough for the representation checks in tests.
        if let Some(r) = self.as_rational(a) {
            if let Some(root) = rational_nth_root(&r, self.ell) {
                return Ok(self.from_rational(root));
            }
        }
        Err(ScalarError::RootUnavailable(self.ell))
    }
}

pub(crate) fn rat_to_f64(x: &BigRational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn rational_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    let num = r.numer();
    let den = r.denom();
    let nr = num.nth_root(n);
    let dr = den.nth_root(n);
    if &nr.pow(n) == num && &dr.pow(n) == den {
        Some(BigRational::new(nr, dr))
    } else {
        None
    }
}

// Small dense Q[x] helpers used by the inverse above.
fn trim(v: &mut Vec<BigRational>) {
    while v.last().map_or(false, |x| x.is_zero()) {
        v.pop();
    }
}
fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}
fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], rem);
    }
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let c = rem.last().unwrap() / &lead;
        let k = rem.len() - 1 - db;
        quot[k] = c.clone();
        for j in 0..=db {
            let adj = &c * &b[j];
            rem[k + j] -= adj;
        }
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_3_identity() {
        // 1 + zeta + zeta^2 = 0 for ell = 3
        let f = CycField::new(3);
        let s = f.add(&f.add(&f.one(), &f.zeta()), &f.zeta_pow(2));
        assert!(f.is_zero(&s));
    }

    #[test]
    fn zeta_cubed_is_one() {
        let f = CycField::new(3);
        let z3 = f.pow(&f.zeta(), 3).unwrap();
        assert!(f.eq_el(&z3, &f.one()));
        assert!(f.eq_el(&f.add(&f.zeta(), &f.zeta_pow(2)), &f.from_i64(-1)));
    }

    #[test]
    fn geometric_sum_ell_5() {
        let f = CycField::new(5);
        let mut s = f.zero();
        for k in 0..5 {
            s = f.add(&s, &f.zeta_pow(k));
        }
        assert!(f.is_zero(&s));
    }

    #[test]
    fn inverse_of_random_elements() {
        let f = CycField::new(7);
        let mut x = f.add(&f.zeta_pow(3), &f.from_i64(2));
        x = f.sub(&x, &f.zeta_pow(5));
        let y = f.inv(&x).unwrap();
        assert!(f.eq_el(&f.mul(&x, &y), &f.one()));
    }

    #[test]
    fn embed_zeta_ell_3() {
        let f = CycField::new(3);
        let z = f.embed(&f.zeta(), &EmbedPoint::mu(Complex64::new(1.0, 0.0))).unwrap();
        assert!((z - Complex64::new(-0.5, 0.8660254037844386)).norm() < 1e-12);
    }

    #[test]
    fn exact_root_of_rational_cube() {
        let f = CycField::new(3);
        let r = f.ell_th_root(&f.from_i64(8)).unwrap();
        assert!(f.eq_el(&r, &f.from_i64(2)));
    }
}
