//! The ell^2-dimensional simple bimodules attached to a colored strand, the
//! cyclic irreducible representations they come from, and the linear maps
//! (braiding, evaluation, coevaluation) that a diagram evaluates through.
//!
//! A bimodule is modeled as the quotient of the algebra by the kernel of the
//! extended character: concretely, a basis of ell^2 monomials together with
//! closed-form structure constants. Three bases cover all colors:
//!
//! * `KE`    - monomials K^i E^j, valid when eps = chi(E^ell) != 0;
//! * `KF`    - monomials K^i F^j, valid when phi != 0;
//! * `Central` - matrix units of the underlying irreducible representation,
//!   used when eps = phi = 0. There the diagonal scale beta = zeta mu^{+-1}
//!   is forced by the Casimir, so all structure constants stay rational in mu.
//!
//! In the two monomial bases every structure constant is a rational function
//! of (kappa, eps, phi, mu + mu^-1) alone; no ell-th roots enter. That is what
//! keeps the symbolic pipeline inside the function field.

mod rmatrix;

pub use rmatrix::{
    braiding, ev_coev, rmatrix, verify_braiding_contracts, BraidMap, EvCoevKind, LegSig,
    LinearMap, TensEl, TensorPair,
};

use crate::characters::CentralCharacter;
use crate::qalgebra::AlgebraElement;
use crate::scalars::Field;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BimodError {
    #[error("no basis available: {0}")]
    BasisUnavailable(String),
    #[error("inadmissible pair of characters")]
    Inadmissible,
    #[error("crossing system degenerated")]
    NoSolution,
    #[error("mu is not an ell-th root of an eigenvalue of psi(chi)")]
    BadFractionalEigenvalue,
    #[error("scalar error: {0}")]
    Scalar(#[from] crate::ScalarError),
}

impl From<crate::characters::CharError> for BimodError {
    fn from(e: crate::characters::CharError) -> Self {
        match e {
            crate::characters::CharError::Inadmissible => BimodError::Inadmissible,
            crate::characters::CharError::NoSolution => BimodError::NoSolution,
            crate::characters::CharError::EigenvalueMismatch => BimodError::BadFractionalEigenvalue,
            other => BimodError::BasisUnavailable(other.to_string()),
        }
    }
}

/// Which family of monomials spans the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    KE,
    KF,
    Central,
}

/// Coefficient vector of an element of the quotient, relative to the
/// module's declared basis: index i*ell + j is K^i E^j (KE), K^i F^j (KF) or
/// the matrix unit sending basis vector j to basis vector i (Central).
pub type BimoduleElement<F> = Vec<<F as Field>::El>;

/// A PBW word with nonnegative exponents, used to express basis elements of
/// one quotient inside another through an algebra map.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Gen {
    K,
    E,
    Ff,
}

/// The simple bimodule attached to a color (chi, mu): dimension ell^2 with
/// multiplication given by closed-form structure constants.
#[derive(Clone, Debug)]
pub struct SimpleBimodule<F: Field> {
    pub chi: CentralCharacter<F>,
    pub kind: BasisKind,
    ell: u32,
    omega: F::El,
    kappa_inv: F::El,
    /// chi(F^ell) = -phi/kappa
    chi_f: F::El,
    /// Central kind only: beta with beta^ell = kappa and
    /// zeta^-1 beta + zeta beta^-1 = omega.
    beta: Option<F::El>,
    /// Central kind only: lowering coefficients c_k for k = 1..ell-1.
    lower: Vec<F::El>,
}

impl<F: Field> SimpleBimodule<F> {
    pub fn new(f: &F, chi: &CentralCharacter<F>) -> Result<Self, BimodError> {
        if f.is_zero(&chi.kappa) || f.is_zero(&chi.mu) {
            return Err(BimodError::BasisUnavailable("kappa and mu must be nonzero".into()));
        }
        if !chi.satisfies_trace_relation(f) {
            return Err(BimodError::BadFractionalEigenvalue);
        }
        let ell = f.ell();
        let omega = chi.omega(f);
        let kappa_inv = f.inv(&chi.kappa)?;
        let chi_f = chi.chi_f_ell(f);
        let kind = if !f.is_zero(&chi.eps) {
            BasisKind::KE
        } else if !f.is_zero(&chi.phi) {
            BasisKind::KF
        } else {
            BasisKind::Central
        };
        let (beta, lower) = if kind == BasisKind::Central {
            // eps = phi = 0 forces mu^ell in {kappa, kappa^-1}; beta = zeta mu
            // or zeta mu^-1 accordingly, so the Casimir acts by omega.
            let ml = f.pow(&chi.mu, ell as i64)?;
            let beta = if f.eq_el(&ml, &chi.kappa) {
                f.mul(&f.zeta(), &chi.mu)
            } else if f.eq_el(&f.inv(&ml)?, &chi.kappa) {
                f.mul(&f.zeta(), &f.inv(&chi.mu)?)
            } else {
                return Err(BimodError::BadFractionalEigenvalue);
            };
            let binv = f.inv(&beta)?;
            let mut lower = Vec::with_capacity(ell as usize - 1);
            for k in 1..ell as i64 {
                let t = f.mul(&f.zeta_pow(2 * k - 1), &beta);
                let t2 = f.mul(&f.zeta_pow(1 - 2 * k), &binv);
                lower.push(f.sub(&f.sub(&omega, &t), &t2));
            }
            (Some(beta), lower)
        } else {
            (None, vec![])
        };
        Ok(SimpleBimodule { chi: chi.clone(), kind, ell, omega, kappa_inv, chi_f, beta, lower })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }
    pub fn dim(&self) -> u16 {
        (self.ell * self.ell) as u16
    }
    pub fn idx(&self, i: u32, j: u32) -> u16 {
        (i * self.ell + j) as u16
    }
    pub fn unidx(&self, x: u16) -> (u32, u32) {
        (x as u32 / self.ell, x as u32 % self.ell)
    }

    /// Product of two basis elements: always at most one output term.
    pub fn mul_basis(&self, f: &F, x: u16, y: u16) -> Option<(u16, F::El)> {
        let ell = self.ell;
        let (i1, j1) = self.unidx(x);
        let (i2, j2) = self.unidx(y);
        match self.kind {
            BasisKind::KE => {
                // (K^i1 E^j1)(K^i2 E^j2) = zeta^(-2 j1 i2) K^(i1+i2) E^(j1+j2)
                let mut c = f.zeta_pow(-2 * j1 as i64 * i2 as i64);
                let isum = i1 + i2;
                let jsum = j1 + j2;
                if isum >= ell {
                    c = f.mul(&c, &self.chi.kappa);
                }
                if jsum >= ell {
                    c = f.mul(&c, &self.chi.eps);
                }
                Some((self.idx(isum % ell, jsum % ell), c))
            }
            BasisKind::KF => {
                let mut c = f.zeta_pow(2 * j1 as i64 * i2 as i64);
                let isum = i1 + i2;
                let jsum = j1 + j2;
                if isum >= ell {
                    c = f.mul(&c, &self.chi.kappa);
                }
                if jsum >= ell {
                    c = f.mul(&c, &self.chi_f);
                }
                Some((self.idx(isum % ell, jsum % ell), c))
            }
            BasisKind::Central => {
                // e_(i1 j1) e_(i2 j2) = delta_(j1 i2) e_(i1 j2)
                if j1 == i2 {
                    Some((self.idx(i1, j2), f.one()))
                } else {
                    None
                }
            }
        }
    }

    /// Unit element of the quotient algebra.
    pub fn one(&self, f: &F) -> ModEl<F> {
        let mut m = ModEl::zero();
        match self.kind {
            BasisKind::KE | BasisKind::KF => m.add_term(f, self.idx(0, 0), f.one()),
            BasisKind::Central => {
                for k in 0..self.ell {
                    m.add_term(f, self.idx(k, k), f.one());
                }
            }
        }
        m
    }

    /// Image of the generator K.
    pub fn el_k(&self, f: &F) -> ModEl<F> {
        let mut m = ModEl::zero();
        match self.kind {
            BasisKind::KE | BasisKind::KF => m.add_term(f, self.idx(1, 0), f.one()),
            BasisKind::Central => {
                let beta = self.beta.as_ref().unwrap();
                for k in 0..self.ell {
                    m.add_term(f, self.idx(k, k), f.mul(beta, &f.zeta_pow(2 * k as i64)));
                }
            }
        }
        m
    }

    /// Image of K^-1 = kappa^-1 K^(ell-1).
    pub fn el_kinv(&self, f: &F) -> ModEl<F> {
        let mut m = ModEl::zero();
        match self.kind {
            BasisKind::KE | BasisKind::KF => {
                m.add_term(f, self.idx(self.ell - 1, 0), self.kappa_inv.clone())
            }
            BasisKind::Central => {
                let beta = self.beta.as_ref().unwrap();
                let bi = f.inv(beta).unwrap();
                for k in 0..self.ell {
                    m.add_term(f, self.idx(k, k), f.mul(&bi, &f.zeta_pow(-2 * k as i64)));
                }
            }
        }
        m
    }

    /// Image of the generator E. In the KF basis E is eliminated through
    /// E = (Omega - zeta^-1 K - zeta K^-1) F^-1 with F^-1 = -(kappa/phi) F^(ell-1).
    pub fn el_e(&self, f: &F) -> ModEl<F> {
        let mut m = ModEl::zero();
        match self.kind {
            BasisKind::KE => m.add_term(f, self.idx(0, 1), f.one()),
            BasisKind::KF => {
                let finv = f.neg(&f.div(&self.chi.kappa, &self.chi.phi).unwrap());
                let j = self.ell - 1;
                m.add_term(f, self.idx(0, j), f.mul(&finv, &self.omega));
                m.add_term(f, self.idx(1, j), f.neg(&f.mul(&finv, &f.zeta_pow(-1))));
                m.add_term(
                    f,
                    self.idx(self.ell - 1, j),
                    f.neg(&f.mul(&finv, &f.mul(&f.zeta(), &self.kappa_inv))),
                );
            }
            BasisKind::Central => {
                for k in 0..self.ell - 1 {
                    m.add_term(f, self.idx(k + 1, k), f.one());
                }
            }
        }
        m
    }

    /// Image of the generator F. In the KE basis F is eliminated through
    /// F = (Omega - zeta K - zeta^-1 K^-1) E^-1 with E^-1 = eps^-1 E^(ell-1).
    pub fn el_f(&self, f: &F) -> ModEl<F> {
        let mut m = ModEl::zero();
        match self.kind {
            BasisKind::KE => {
                let einv = f.inv(&self.chi.eps).unwrap();
                let j = self.ell - 1;
                m.add_term(f, self.idx(0, j), f.mul(&einv, &self.omega));
                m.add_term(f, self.idx(1, j), f.neg(&f.mul(&einv, &f.zeta())));
                m.add_term(
                    f,
                    self.idx(self.ell - 1, j),
                    f.neg(&f.mul(&einv, &f.mul(&f.zeta_pow(-1), &self.kappa_inv))),
                );
            }
            BasisKind::KF => m.add_term(f, self.idx(0, 1), f.one()),
            BasisKind::Central => {
                for k in 1..self.ell {
                    m.add_term(f, self.idx(k - 1, k), self.lower[k as usize - 1].clone());
                }
            }
        }
        m
    }

    /// Express a basis element as a combination of PBW words, for transport
    /// through an algebra map. Monomial bases are their own words; matrix
    /// units decompose as E^(r-c) or F^(c-r) times a Lagrange polynomial in K.
    pub(crate) fn basis_words(&self, f: &F) -> Result<Vec<Vec<(Vec<(Gen, u32)>, F::El)>>, BimodError> {
        let ell = self.ell;
        let mut out = Vec::with_capacity(self.dim() as usize);
        match self.kind {
            BasisKind::KE => {
                for x in 0..self.dim() {
                    let (i, j) = self.unidx(x);
                    out.push(vec![(vec![(Gen::K, i), (Gen::E, j)], f.one())]);
                }
            }
            BasisKind::KF => {
                for x in 0..self.dim() {
                    let (i, j) = self.unidx(x);
                    out.push(vec![(vec![(Gen::K, i), (Gen::Ff, j)], f.one())]);
                }
            }
            BasisKind::Central => {
                let beta = self.beta.as_ref().unwrap();
                // eigenvalues t_k = beta zeta^(2k)
                let ts: Vec<F::El> =
                    (0..ell).map(|k| f.mul(beta, &f.zeta_pow(2 * k as i64))).collect();
                // Lagrange coefficients of the projector onto eigenvector c
                let mut lagrange: Vec<Vec<F::El>> = Vec::with_capacity(ell as usize);
                for c in 0..ell as usize {
                    let mut num = vec![f.one()];
                    let mut den = f.one();
                    for (k, tk) in ts.iter().enumerate() {
                        if k == c {
                            continue;
                        }
                        // num *= (X - t_k)
                        let mut next = vec![f.zero(); num.len() + 1];
                        for (d, co) in num.iter().enumerate() {
                            next[d + 1] = f.add(&next[d + 1], co);
                            next[d] = f.sub(&next[d], &f.mul(co, tk));
                        }
                        num = next;
                        den = f.mul(&den, &f.sub(&ts[c], tk));
                    }
                    let di = f.inv(&den).map_err(|_| {
                        BimodError::BasisUnavailable("repeated K eigenvalues".into())
                    })?;
                    lagrange.push(num.into_iter().map(|co| f.mul(&co, &di)).collect());
                }
                for x in 0..self.dim() {
                    let (r, c) = self.unidx(x);
                    let mut words = vec![];
                    if r >= c {
                        for (m, lam) in lagrange[c as usize].iter().enumerate() {
                            if f.is_zero(lam) {
                                continue;
                            }
                            words.push((vec![(Gen::E, r - c), (Gen::K, m as u32)], lam.clone()));
                        }
                    } else {
                        // e_rc = gamma^-1 F^(c-r) proj_c with
                        // gamma = prod_{k=r+1..c} c_k
                        let mut gamma = f.one();
                        for k in (r + 1)..=c {
                            gamma = f.mul(&gamma, &self.lower[k as usize - 1]);
                        }
                        let gi = f.inv(&gamma).map_err(|_| {
                            BimodError::BasisUnavailable(
                                "degenerate lowering chain at this color".into(),
                            )
                        })?;
                        for (m, lam) in lagrange[c as usize].iter().enumerate() {
                            if f.is_zero(lam) {
                                continue;
                            }
                            words.push((
                                vec![(Gen::Ff, c - r), (Gen::K, m as u32)],
                                f.mul(lam, &gi),
                            ));
                        }
                    }
                    out.push(words);
                }
            }
        }
        Ok(out)
    }

    /// Columns of the left-multiplication operator by `g`.
    pub fn left_mul_cols(&self, f: &F, g: &ModEl<F>) -> Vec<Vec<(u16, F::El)>> {
        (0..self.dim())
            .map(|j| {
                let mut col: BTreeMap<u16, F::El> = BTreeMap::new();
                for (gx, gc) in &g.terms {
                    if let Some((k, c)) = self.mul_basis(f, *gx, j) {
                        let v = f.mul(gc, &c);
                        merge(f, &mut col, k, v);
                    }
                }
                col.into_iter().collect()
            })
            .collect()
    }

    /// The pivotal element K^(ell-1) = kappa K^-1 as a model element.
    pub fn pivotal(&self, f: &F) -> ModEl<F> {
        self.el_kinv(f).scale(f, &self.chi.kappa)
    }
    /// K^(1-ell) = kappa^-1 K.
    pub fn pivotal_inv(&self, f: &F) -> ModEl<F> {
        self.el_k(f).scale(f, &self.kappa_inv)
    }

    /// Image of an algebra element in the quotient: substitute the generator
    /// images and multiply out. Returns the dense coefficient vector.
    pub fn reduce(&self, f: &F, x: &AlgebraElement<F>) -> Result<BimoduleElement<F>, BimodError> {
        let ek = self.el_k(f);
        let ekinv = self.el_kinv(f);
        let ee = self.el_e(f);
        let ef = self.el_f(f);
        let mut acc = ModEl::zero();
        for ((a, b, c), coef) in &x.terms {
            let mut m = self.one(f);
            for _ in 0..*a {
                m = m.mul(f, self, &ef);
            }
            if *b >= 0 {
                for _ in 0..*b {
                    m = m.mul(f, self, &ek);
                }
            } else {
                for _ in 0..(-*b) {
                    m = m.mul(f, self, &ekinv);
                }
            }
            for _ in 0..*c {
                m = m.mul(f, self, &ee);
            }
            acc = acc.add(f, &m.scale(f, coef));
        }
        Ok(acc.to_dense(f, self.dim()))
    }
}

fn merge<F: Field>(f: &F, map: &mut BTreeMap<u16, F::El>, k: u16, v: F::El) {
    if f.is_zero(&v) {
        return;
    }
    match map.get_mut(&k) {
        Some(c) => {
            let s = f.add(c, &v);
            if f.is_zero(&s) {
                map.remove(&k);
            } else {
                *c = s;
            }
        }
        None => {
            map.insert(k, v);
        }
    }
}

/// Sparse element of one quotient module.
#[derive(Clone, Debug)]
pub struct ModEl<F: Field> {
    pub terms: BTreeMap<u16, F::El>,
}

impl<F: Field> ModEl<F> {
    pub fn zero() -> Self {
        ModEl { terms: BTreeMap::new() }
    }
    pub fn basis(idx: u16, f: &F) -> Self {
        let mut m = ModEl::zero();
        m.terms.insert(idx, f.one());
        m
    }
    pub fn add_term(&mut self, f: &F, k: u16, v: F::El) {
        merge(f, &mut self.terms, k, v);
    }
    pub fn add(&self, f: &F, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(f, *k, v.clone());
        }
        out
    }
    pub fn scale(&self, f: &F, s: &F::El) -> Self {
        let mut out = ModEl::zero();
        for (k, v) in &self.terms {
            out.add_term(f, *k, f.mul(v, s));
        }
        out
    }
    pub fn mul(&self, f: &F, m: &SimpleBimodule<F>, o: &Self) -> Self {
        let mut out = ModEl::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &o.terms {
                if let Some((k, c)) = m.mul_basis(f, *x, *y) {
                    out.add_term(f, k, f.mul(&f.mul(cx, cy), &c));
                }
            }
        }
        out
    }
    pub fn to_dense(&self, f: &F, dim: u16) -> Vec<F::El> {
        let mut v = vec![f.zero(); dim as usize];
        for (k, c) in &self.terms {
            v[*k as usize] = c.clone();
        }
        v
    }
    pub fn eq(&self, f: &F, o: &Self) -> bool {
        let mut d = self.clone();
        for (k, v) in &o.terms {
            d.add_term(f, *k, f.neg(v));
        }
        d.terms.is_empty()
    }
}

/// The matrices of K, E, F, Omega on the cyclic irreducible representation,
/// together with the chosen ell-th root beta of kappa.
#[derive(Clone, Debug)]
pub struct IrrepData<F: Field> {
    pub ell: u32,
    pub beta: F::El,
    pub k: Vec<Vec<F::El>>,
    pub e: Vec<Vec<F::El>>,
    pub f_mat: Vec<Vec<F::El>>,
    pub omega: Vec<Vec<F::El>>,
}

fn zeros<F: Field>(f: &F, n: usize) -> Vec<Vec<F::El>> {
    vec![vec![f.zero(); n]; n]
}

fn mat_mul<F: Field>(f: &F, a: &[Vec<F::El>], b: &[Vec<F::El>]) -> Vec<Vec<F::El>> {
    let n = a.len();
    let mut out = zeros(f, n);
    for i in 0..n {
        for k in 0..n {
            if f.is_zero(&a[i][k]) {
                continue;
            }
            for j in 0..n {
                if f.is_zero(&b[k][j]) {
                    continue;
                }
                out[i][j] = f.add(&out[i][j], &f.mul(&a[i][k], &b[k][j]));
            }
        }
    }
    out
}

fn mat_eq_scaled_id<F: Field>(f: &F, a: &[Vec<F::El>], s: &F::El) -> bool {
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j { s.clone() } else { f.zero() };
            if !f.eq_el(v, &want) {
                return false;
            }
        }
    }
    true
}

/// Build the irreducible representation for (chi, mu). The diagonal scale
/// beta is any fixed ell-th root of kappa (exact fields must contain one;
/// the numeric field takes the principal root), except when eps = phi = 0
/// where the Casimir forces beta = zeta mu^{+-1}.
pub fn build_irrep<F: Field>(
    f: &F,
    chi: &CentralCharacter<F>,
) -> Result<IrrepData<F>, BimodError> {
    let ell = f.ell();
    let n = ell as usize;
    if !chi.satisfies_trace_relation(f) {
        return Err(BimodError::BadFractionalEigenvalue);
    }
    let omega_s = chi.omega(f);
    let eps0 = f.is_zero(&chi.eps);
    let phi0 = f.is_zero(&chi.phi);
    let beta = if eps0 && phi0 {
        let ml = f.pow(&chi.mu, ell as i64)?;
        if f.eq_el(&ml, &chi.kappa) {
            f.mul(&f.zeta(), &chi.mu)
        } else {
            f.mul(&f.zeta(), &f.inv(&chi.mu)?)
        }
    } else {
        f.ell_th_root(&chi.kappa)?
    };
    let binv = f.inv(&beta)?;
    let mut k = zeros(f, n);
    for (i, row) in k.iter_mut().enumerate() {
        row[i] = f.mul(&beta, &f.zeta_pow(2 * i as i64));
    }
    let mut e = zeros(f, n);
    let mut fm = zeros(f, n);
    let coef = |j: i64| -> F::El {
        // omega - zeta^(2j-1) beta - zeta^(1-2j) beta^-1
        let t = f.mul(&f.zeta_pow(2 * j - 1), &beta);
        let t2 = f.mul(&f.zeta_pow(1 - 2 * j), &binv);
        f.sub(&f.sub(&omega_s, &t), &t2)
    };
    if !eps0 {
        // E cyclic with wrap eps; F from the Casimir
        for kk in 0..n - 1 {
            e[kk + 1][kk] = f.one();
        }
        e[0][n - 1] = chi.eps.clone();
        for kk in 1..n {
            fm[kk - 1][kk] = coef(kk as i64);
        }
        fm[n - 1][0] = f.div(&coef(0), &chi.eps)?;
    } else if !phi0 {
        // F cyclic with wrap chi(F^ell); E from the Casimir
        let chif = chi.chi_f_ell(f);
        for kk in 1..n {
            fm[kk - 1][kk] = f.one();
        }
        fm[n - 1][0] = chif.clone();
        for kk in 0..n - 1 {
            e[kk + 1][kk] = coef(kk as i64 + 1);
        }
        e[0][n - 1] = f.div(&coef(0), &chif)?;
    } else {
        for kk in 0..n - 1 {
            e[kk + 1][kk] = f.one();
        }
        for kk in 1..n {
            fm[kk - 1][kk] = coef(kk as i64);
        }
    }
    // Omega = E F + zeta^-1 K + zeta K^-1 as matrices
    let mut omega = mat_mul(f, &e, &fm);
    for i in 0..n {
        let kin = f.inv(&k[i][i])?;
        omega[i][i] = f.add(
            &omega[i][i],
            &f.add(&f.mul(&f.zeta_pow(-1), &k[i][i]), &f.mul(&f.zeta(), &kin)),
        );
    }
    let data = IrrepData { ell, beta, k, e, f_mat: fm, omega };
    // construction-time invariants
    if !mat_eq_scaled_id(f, &data.omega, &omega_s) {
        return Err(BimodError::BasisUnavailable("Casimir is not scalar".into()));
    }
    let pow = |m: &[Vec<F::El>], p: u32| {
        let mut acc = zeros(f, n);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] = f.one();
        }
        for _ in 0..p {
            acc = mat_mul(f, &acc, m);
        }
        acc
    };
    if !mat_eq_scaled_id(f, &pow(&data.k, ell), &chi.kappa)
        || !mat_eq_scaled_id(f, &pow(&data.e, ell), &chi.eps)
        || !mat_eq_scaled_id(f, &pow(&data.f_mat, ell), &chi.chi_f_ell(f))
    {
        return Err(BimodError::BasisUnavailable("central character mismatch".into()));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::test_support::{random_char, seeded};
    use crate::qalgebra;
    use crate::scalars::{CycField, Field, NumField};
    use num::complex::Complex64;

    fn f3() -> CycField {
        CycField::new(3)
    }

    /// A KE-kind character over the rationals with kappa a perfect cube so
    /// the irrep exists exactly: kappa = 8, eps = 2, mu = 1, phi solved.
    fn ke_char(f: &CycField) -> CentralCharacter<CycField> {
        let kappa = f.from_i64(8);
        let eps = f.from_i64(2);
        let mu = f.one();
        let ki = f.inv(&kappa).unwrap();
        let target = f.from_i64(2);
        let phi = f.div(&f.mul(&f.sub(&f.add(&kappa, &ki), &target), &kappa), &eps).unwrap();
        CentralCharacter::new(f, kappa, eps, phi, mu).unwrap()
    }

    #[test]
    fn irrep_relations_hold() {
        let f = f3();
        let chi = ke_char(&f);
        let ir = build_irrep(&f, &chi).unwrap();
        // K E = zeta^2 E K and K F = zeta^-2 F K as matrices
        let ke = mat_mul(&f, &ir.k, &ir.e);
        let ek = mat_mul(&f, &ir.e, &ir.k);
        for i in 0..3 {
            for j in 0..3 {
                assert!(f.eq_el(&ke[i][j], &f.mul(&f.zeta_pow(2), &ek[i][j])));
            }
        }
        // commutator [E, F] = (zeta - zeta^-1)(K - K^-1)
        let ef = mat_mul(&f, &ir.e, &ir.f_mat);
        let fe = mat_mul(&f, &ir.f_mat, &ir.e);
        let w = f.sub(&f.zeta(), &f.zeta_pow(-1));
        for i in 0..3 {
            for j in 0..3 {
                let lhs = f.sub(&ef[i][j], &fe[i][j]);
                let rhs = if i == j {
                    f.mul(&w, &f.sub(&ir.k[i][i], &f.inv(&ir.k[i][i]).unwrap()))
                } else {
                    f.zero()
                };
                assert!(f.eq_el(&lhs, &rhs));
            }
        }
    }

    #[test]
    fn irrep_numeric_random_colors() {
        let nf = NumField::new(3, 1e-9);
        // random-ish numeric color: kappa, eps, mu arbitrary, phi from trace
        let kappa = Complex64::new(0.7, 0.4);
        let eps = Complex64::new(-0.3, 1.1);
        let mu = Complex64::new(1.2, -0.5);
        let t = mu.powi(3) + mu.powi(-3);
        let phi = (kappa + 1.0 / kappa - t) * kappa / eps;
        let chi = CentralCharacter::new(&nf, kappa, eps, phi, mu).unwrap();
        let ir = build_irrep(&nf, &chi).unwrap();
        // E^ell = eps id
        let e3 = mat_mul(&nf, &ir.e, &mat_mul(&nf, &ir.e, &ir.e));
        assert!(mat_eq_scaled_id(&nf, &e3, &eps));
    }

    #[test]
    fn end_consistency_rank() {
        // the images of the ell^2 basis monomials K^i E^j span End(V)
        let f = f3();
        let chi = ke_char(&f);
        let ir = build_irrep(&f, &chi).unwrap();
        let n = 3usize;
        let mut cols: Vec<Vec<_>> = vec![];
        let idm = {
            let mut m = zeros(&f, n);
            for i in 0..n {
                m[i][i] = f.one();
            }
            m
        };
        let mut kp = idm.clone();
        for _i in 0..3 {
            let mut ep = kp.clone();
            for _j in 0..3 {
                cols.push(ep.iter().flatten().cloned().collect());
                ep = mat_mul(&f, &ep, &ir.e);
            }
            kp = mat_mul(&f, &kp, &ir.k);
        }
        // Gaussian elimination over the exact field
        let mut rank = 0;
        let mut rows: Vec<Vec<_>> = (0..9)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect::<Vec<_>>())
            .collect();
        for col in 0..9 {
            if let Some(p) = (rank..9).find(|&r| !f.is_zero(&rows[r][col])) {
                rows.swap(rank, p);
                let inv = f.inv(&rows[rank][col]).unwrap();
                for r in 0..9 {
                    if r != rank && !f.is_zero(&rows[r][col]) {
                        let scale = f.mul(&rows[r][col], &inv);
                        for c2 in 0..9 {
                            let d = f.mul(&rows[rank][c2], &scale);
                            rows[r][c2] = f.sub(&rows[r][c2], &d);
                        }
                    }
                }
                rank += 1;
            }
        }
        assert_eq!(rank, 9);
    }

    #[test]
    fn reduce_casimir_and_central_values() {
        let f = f3();
        let chi = ke_char(&f);
        let m = SimpleBimodule::new(&f, &chi).unwrap();
        // reduce(Omega) = (mu + mu^-1) * unit
        let om = qalgebra::casimir(&f);
        let v = m.reduce(&f, &om).unwrap();
        assert!(f.eq_el(&v[0], &chi.omega(&f)));
        for x in &v[1..] {
            assert!(f.is_zero(x));
        }
        // reduce(K^ell) = kappa * unit
        let kl = qalgebra::AlgebraElement::gen_k(&f, 3);
        let v = m.reduce(&f, &kl).unwrap();
        assert!(f.eq_el(&v[0], &chi.kappa));
        for x in &v[1..] {
            assert!(f.is_zero(x));
        }
        // reduce(EF) = reduce(Omega - zeta^-1 K - zeta K^-1)
        let e = qalgebra::AlgebraElement::gen_e(&f);
        let fe = qalgebra::AlgebraElement::gen_f(&f);
        let ef = qalgebra::multiply(&f, &e, &fe);
        let mut rhs = qalgebra::casimir(&f);
        rhs.add_term(&f, (0, 1, 0), f.neg(&f.zeta_pow(-1)));
        rhs.add_term(&f, (0, -1, 0), f.neg(&f.zeta()));
        let va = m.reduce(&f, &ef).unwrap();
        let vb = m.reduce(&f, &rhs).unwrap();
        for (x, y) in va.iter().zip(&vb) {
            assert!(f.eq_el(x, y));
        }
    }

    #[test]
    fn model_generators_satisfy_relations() {
        // in all three basis kinds the generator images satisfy the algebra
        // relations and the central character values
        let f = f3();
        let mut rng = seeded(41);
        let mut tried = [false; 3];
        let mut count = 0;
        while count < 60 {
            let chi = random_char(&f, &mut rng);
            let Ok(m) = SimpleBimodule::new(&f, &chi) else { continue };
            count += 1;
            tried[match m.kind {
                BasisKind::KE => 0,
                BasisKind::KF => 1,
                BasisKind::Central => 2,
            }] = true;
            let (k, e, ff) = (m.el_k(&f), m.el_e(&f), m.el_f(&f));
            let ke = k.mul(&f, &m, &e);
            let ek = e.mul(&f, &m, &k);
            assert!(ke.eq(&f, &ek.scale(&f, &f.zeta_pow(2))));
            let kf = k.mul(&f, &m, &ff);
            let fk = ff.mul(&f, &m, &k);
            assert!(kf.eq(&f, &fk.scale(&f, &f.zeta_pow(-2))));
            // [E, F] = (zeta - zeta^-1)(K - K^-1)
            let lhs = e.mul(&f, &m, &ff).add(&f, &ff.mul(&f, &m, &e).scale(&f, &f.from_i64(-1)));
            let w = f.sub(&f.zeta(), &f.zeta_pow(-1));
            let rhs = k.add(&f, &m.el_kinv(&f).scale(&f, &f.from_i64(-1))).scale(&f, &w);
            assert!(lhs.eq(&f, &rhs));
            // K K^-1 = 1
            assert!(k.mul(&f, &m, &m.el_kinv(&f)).eq(&f, &m.one(&f)));
            // E^ell = eps, F^ell = chi(F^ell), Omega = omega
            let mut ep = m.one(&f);
            let mut fp = m.one(&f);
            for _ in 0..3 {
                ep = ep.mul(&f, &m, &e);
                fp = fp.mul(&f, &m, &ff);
            }
            assert!(ep.eq(&f, &m.one(&f).scale(&f, &chi.eps)));
            assert!(fp.eq(&f, &m.one(&f).scale(&f, &chi.chi_f_ell(&f))));
            let om = e
                .mul(&f, &m, &ff)
                .add(&f, &k.scale(&f, &f.zeta_pow(-1)))
                .add(&f, &m.el_kinv(&f).scale(&f, &f.zeta()));
            assert!(om.eq(&f, &m.one(&f).scale(&f, &chi.omega(&f))));
        }
        assert!(tried[0], "KE kind never exercised");
    }

    #[test]
    fn central_kind_words_reconstruct_units() {
        // for a commutative color the matrix units must decompose into PBW
        // words whose product of generator images reproduces them
        let f = f3();
        let chi =
            CentralCharacter::new(&f, f.from_i64(8), f.zero(), f.zero(), f.from_i64(2)).unwrap();
        let m = SimpleBimodule::new(&f, &chi).unwrap();
        assert_eq!(m.kind, BasisKind::Central);
        let words = m.basis_words(&f).unwrap();
        let (k, e, ff) = (m.el_k(&f), m.el_e(&f), m.el_f(&f));
        for x in 0..m.dim() {
            let mut acc = ModEl::zero();
            for (word, coef) in &words[x as usize] {
                let mut w = m.one(&f);
                for (g, p) in word {
                    let gen = match g {
                        Gen::K => &k,
                        Gen::E => &e,
                        Gen::Ff => &ff,
                    };
                    for _ in 0..*p {
                        w = w.mul(&f, &m, gen);
                    }
                }
                acc = acc.add(&f, &w.scale(&f, coef));
            }
            assert!(acc.eq(&f, &ModEl::basis(x, &f)), "unit {x} not reconstructed");
        }
    }
}
