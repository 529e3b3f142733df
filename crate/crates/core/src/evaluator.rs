//! Evaluation of a colored Morse word: compose the slice maps bottom-to-top
//! and extract the scalar by which the composite acts on the boundary
//! bimodule.
//!
//! The state after k slices is a sparse vector over the tensor product of
//! one ell^2-dimensional factor per strand of the section. Crossings act by
//! the braiding on two adjacent factors, cups insert the (co)evaluation
//! tensors, caps contract them. Because the boundary bimodule is simple, the
//! final map is a scalar multiple of the identity; the scalar is the
//! invariant and the deviation from scalar-ness is checked, not assumed.

use crate::bimodule::{braiding, BimodError, BraidMap, SimpleBimodule};
use crate::diagram::{groupoid_check, Coloring, DiagramError, MorseWord, SliceKind};
use crate::scalars::Field;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Bimodule(#[from] BimodError),
    #[error("groupoid relations fail at a crossing of the supplied coloring")]
    BadColoring,
    #[error("composite is not a scalar multiple of the identity: {0}")]
    NotScalar(String),
}

#[derive(Clone, Debug)]
pub struct EvalOptions {
    /// Number of basis columns of the final map to compute; defaults to all
    /// ell^2. The scalar needs one column, the deviation check benefits from
    /// every extra one.
    pub max_columns: Option<usize>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { max_columns: None }
    }
}

#[derive(Clone, Debug)]
pub struct EvaluationResult<F: Field> {
    pub scalar: F::El,
    /// Exactly zero on exact backends; the max entry-wise deviation from
    /// scalar * identity on the numeric backend.
    pub deviation: F::El,
    pub columns_checked: usize,
    /// Fingerprint of the coloring that produced the scalar.
    pub digest: String,
}

const LEG_BITS: u32 = 6;
const LEG_MASK: u64 = (1 << LEG_BITS) - 1;

fn leg_get(key: u64, p: usize) -> u16 {
    ((key >> (LEG_BITS * p as u32)) & LEG_MASK) as u16
}
fn leg_set(key: u64, p: usize, v: u16) -> u64 {
    let sh = LEG_BITS * p as u32;
    (key & !(LEG_MASK << sh)) | ((v as u64) << sh)
}
fn leg_insert2(key: u64, width: usize, p: usize, a: u16, b: u16) -> u64 {
    // shift legs p.. up by two slots, then write a, b at p, p+1
    let sh = LEG_BITS * p as u32;
    let low = key & ((1u64 << sh) - 1);
    let high = (key >> sh) << (sh + 2 * LEG_BITS);
    let _ = width;
    low | high | ((a as u64) << sh) | ((b as u64) << (sh + LEG_BITS))
}
fn leg_remove2(key: u64, p: usize) -> u64 {
    let sh = LEG_BITS * p as u32;
    let low = key & ((1u64 << sh) - 1);
    let high = (key >> (sh + 2 * LEG_BITS)) << sh;
    low | high
}

enum SliceOp<F: Field> {
    Nop,
    Cross { p: usize, bm: Box<BraidMap<F>> },
    /// spawn pairs (a, b) with coefficient at legs (p, p+1)
    Cup { p: usize, pairs: Vec<(u16, u16, F::El)> },
    /// contract legs (p, p+1) against coefficient table indexed (a, b)
    Cap { p: usize, table: Vec<Vec<F::El>> },
}

/// Compose the slice maps of a colored word and extract the scalar.
pub fn evaluate<F: Field>(
    f: &F,
    word: &MorseWord,
    coloring: &Coloring<F>,
    opts: &EvalOptions,
) -> Result<EvaluationResult<F>, EvalError> {
    word.validate()?;
    if !groupoid_check(f, word, coloring) {
        return Err(EvalError::BadColoring);
    }
    let ell2 = (f.ell() * f.ell()) as usize;
    let dim = ell2 as u16;

    // precompute slice operators
    let mut ops: Vec<SliceOp<F>> = Vec::with_capacity(word.slices.len());
    for (i, s) in word.slices.iter().enumerate() {
        let below = &coloring.sections[i];
        let op = match *s {
            SliceKind::Id => SliceOp::Nop,
            SliceKind::Pos(p) | SliceKind::Neg(p) => {
                let sign = if matches!(s, SliceKind::Pos(_)) { 1 } else { -1 };
                let bm = braiding(f, sign, &below[p], &below[p + 1])?;
                SliceOp::Cross { p, bm: Box::new(bm) }
            }
            SliceKind::CupL(p) => {
                // 1 |-> sum_j b_j (x) b^j
                let pairs = (0..dim).map(|j| (j, j, f.one())).collect();
                SliceOp::Cup { p, pairs }
            }
            SliceKind::CupR(p) => {
                // 1 |-> sum_j b^j (x) K^(ell-1) b_j
                let m = SimpleBimodule::new(f, &coloring.sections[i + 1][p])?;
                let piv = m.left_mul_cols(f, &m.pivotal(f));
                let mut pairs = vec![];
                for (j, col) in piv.iter().enumerate() {
                    for (k, v) in col {
                        pairs.push((j as u16, *k, v.clone()));
                    }
                }
                SliceOp::Cup { p, pairs }
            }
            SliceKind::CapL(p) => {
                // f (x) w |-> f(w)
                let mut table = vec![vec![f.zero(); ell2]; ell2];
                for (a, row) in table.iter_mut().enumerate() {
                    row[a] = f.one();
                }
                SliceOp::Cap { p, table }
            }
            SliceKind::CapR(p) => {
                // v (x) f |-> f(K^(1-ell) v)
                let m = SimpleBimodule::new(f, &below[p])?;
                let piv = m.left_mul_cols(f, &m.pivotal_inv(f));
                let mut table = vec![vec![f.zero(); ell2]; ell2];
                for (a, col) in piv.iter().enumerate() {
                    for (b, v) in col {
                        table[a][*b as usize] = v.clone();
                    }
                }
                SliceOp::Cap { p, table }
            }
        };
        ops.push(op);
    }

    let ncols = opts.max_columns.unwrap_or(ell2).min(ell2);
    let mut final_cols: Vec<Vec<F::El>> = Vec::with_capacity(ncols);
    for input in 0..ncols {
        let mut state: BTreeMap<u64, F::El> = BTreeMap::new();
        state.insert(input as u64, f.one());
        let mut width = 1usize;
        for op in &ops {
            let mut next: BTreeMap<u64, F::El> = BTreeMap::new();
            match op {
                SliceOp::Nop => next = std::mem::take(&mut state),
                SliceOp::Cross { p, bm } => {
                    let dim2 = bm.in_right.dim() as usize;
                    let dim3 = bm.out_right.dim() as u32;
                    for (key, c) in &state {
                        let a = leg_get(*key, *p) as usize;
                        let b = leg_get(*key, *p + 1) as usize;
                        for (out, v) in &bm.cols[a * dim2 + b] {
                            let x = (out / dim3) as u16;
                            let y = (out % dim3) as u16;
                            let nk = leg_set(leg_set(*key, *p, x), *p + 1, y);
                            merge(f, &mut next, nk, f.mul(c, v));
                        }
                    }
                }
                SliceOp::Cup { p, pairs } => {
                    for (key, c) in &state {
                        for (a, b, v) in pairs {
                            let nk = leg_insert2(*key, width, *p, *a, *b);
                            merge(f, &mut next, nk, f.mul(c, v));
                        }
                    }
                    width += 2;
                }
                SliceOp::Cap { p, table } => {
                    for (key, c) in &state {
                        let a = leg_get(*key, *p) as usize;
                        let b = leg_get(*key, *p + 1) as usize;
                        let v = &table[a][b];
                        if f.is_zero(v) {
                            continue;
                        }
                        let nk = leg_remove2(*key, *p);
                        merge(f, &mut next, nk, f.mul(c, v));
                    }
                    width -= 2;
                }
            }
            state = next;
        }
        debug_assert_eq!(width, 1);
        let mut col = vec![f.zero(); ell2];
        for (key, c) in state {
            col[key as usize] = c;
        }
        final_cols.push(col);
    }

    // scalar = average of computed diagonal entries (trace / ell^2 when all
    // columns are present); deviation = worst off-scalar entry
    let mut trace = f.zero();
    for (c, col) in final_cols.iter().enumerate() {
        trace = f.add(&trace, &col[c]);
    }
    let scalar = f
        .div(&trace, &f.from_i64(ncols as i64))
        .expect("column count is nonzero");
    let mut deviation = f.zero();
    for (c, col) in final_cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            let want = if r == c { scalar.clone() } else { f.zero() };
            let d = f.sub(v, &want);
            if f.is_exact() {
                if !f.is_zero(&d) {
                    deviation = d.clone();
                }
            } else {
                // numeric: track the max modulus via embed
                let dn = f
                    .embed(&d, &crate::scalars::EmbedPoint::mu(num::complex::Complex64::new(0.0, 0.0)))
                    .map(|z| z.norm())
                    .unwrap_or(f64::INFINITY);
                let cur = f
                    .embed(&deviation, &crate::scalars::EmbedPoint::mu(num::complex::Complex64::new(0.0, 0.0)))
                    .map(|z| z.norm())
                    .unwrap_or(0.0);
                if dn > cur {
                    deviation = d.clone();
                }
            }
        }
    }
    if f.is_exact() {
        if !f.is_zero(&deviation) {
            return Err(EvalError::NotScalar(f.render(&deviation)));
        }
    } else {
        let dn = f
            .embed(&deviation, &crate::scalars::EmbedPoint::mu(num::complex::Complex64::new(0.0, 0.0)))
            .map(|z| z.norm())
            .unwrap_or(f64::INFINITY);
        let sn = f
            .embed(&scalar, &crate::scalars::EmbedPoint::mu(num::complex::Complex64::new(0.0, 0.0)))
            .map(|z| z.norm())
            .unwrap_or(1.0);
        if dn > 1e-8 * (1.0 + sn) {
            return Err(EvalError::NotScalar(format!("deviation {dn:.3e}")));
        }
    }
    let digest = coloring_digest(f, coloring);
    Ok(EvaluationResult { scalar, deviation, columns_checked: ncols, digest })
}

fn merge<F: Field>(f: &F, map: &mut BTreeMap<u64, F::El>, k: u64, v: F::El) {
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

fn coloring_digest<F: Field>(f: &F, coloring: &Coloring<F>) -> String {
    // FNV-1a over the rendered colors
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |s: &str| {
        for byte in s.bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    for sec in &coloring.sections {
        for c in sec {
            eat(&f.render(&c.kappa));
            eat(&f.render(&c.eps));
            eat(&f.render(&c.phi));
        }
    }
    eat(&f.render(&coloring.mu));
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::CentralCharacter;
    use crate::diagram::Seeds;
    use crate::scalars::{CycField, Field};

    #[test]
    fn unknot_identity_strand_is_one() {
        let f = CycField::new(3);
        let word = MorseWord::new(vec![SliceKind::Id]);
        let chi =
            CentralCharacter::new(&f, f.from_i64(8), f.zero(), f.zero(), f.from_i64(2)).unwrap();
        let mut seeds = Seeds::new();
        seeds.insert((0, 0), chi);
        let col = crate::diagram::propagate(&f, &word, &seeds).unwrap();
        let r = evaluate(&f, &word, &col, &EvalOptions::default()).unwrap();
        assert!(f.eq_el(&r.scalar, &f.one()));
        assert!(f.is_zero(&r.deviation));
        assert_eq!(r.columns_checked, 9);
    }

    #[test]
    fn unknot_random_admissible_colorings() {
        use crate::characters::test_support::{random_char, seeded};
        let f = CycField::new(3);
        let word = MorseWord::new(vec![SliceKind::Id]);
        let mut rng = seeded(73);
        for _ in 0..10 {
            let chi = random_char(&f, &mut rng);
            let mut seeds = Seeds::new();
            seeds.insert((0, 0), chi);
            let col = crate::diagram::propagate(&f, &word, &seeds).unwrap();
            let r = evaluate(&f, &word, &col, &EvalOptions::default()).unwrap();
            assert!(f.eq_el(&r.scalar, &f.one()));
        }
    }
}
