// Development probe, round 2. The crossing map acts on canonical meridians by
//   Pos: (p, q) -> (q, q^-1 p q),    Neg: (p, q) -> (p q p^-1, p).
// Closure of the width-2 word Pos(0)^3 forces M1 M0 M1 = M0 M1 M0; the width-3
// word (Pos(0) Neg(1))^2 forces M2 = M0^-1 M1 M0, C M2 C^-1 = M0 and
// M2 C M2^-1 = M1 with C = M1^-1 M0 M1. Seeds follow the below-path recipe
//   psi(x0) = M0, psi(s1) = (x0^-)^-1 M1 x0^-,
//   psi(s2) = (x0^- s1^-)^-1 M2 (x0^- s1^-).
// Search conjugations g rho g^-1 until the factorizations exist, then
// evaluate and compare against 27 / 162.
use kare::characters::*;
use kare::diagram::*;
use kare::evaluator::*;
use kare::scalars::{EmbedPoint, Field, NumField};
use num::complex::Complex64;

type M = Holonomy2x2<NumField>;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn conjugators(f: &NumField) -> Vec<(String, M)> {
    let id = Holonomy2x2::identity(f);
    let up = |t: f64| Holonomy2x2::new(c(1.0), c(t), c(0.0), c(1.0));
    let lo = |t: f64| Holonomy2x2::new(c(1.0), c(0.0), c(t), c(1.0));
    let weyl = Holonomy2x2::new(c(0.0), c(-1.0), c(1.0), c(0.0));
    vec![
        ("id".into(), id),
        ("u(1)".into(), up(1.0)),
        ("l(1)".into(), lo(1.0)),
        ("u(-1)".into(), up(-1.0)),
        ("l(-1)".into(), lo(-1.0)),
        ("w".into(), weyl.clone()),
        ("w u(1)".into(), weyl.mul(f, &up(1.0))),
        ("u(1) w".into(), up(1.0).mul(f, &weyl)),
        ("u(2)".into(), up(2.0)),
        ("l(2)".into(), lo(2.0)),
    ]
}

fn main() {
    let f = NumField::new(3, 1e-9);
    let one = c(1.0);
    let a = Holonomy2x2::new(c(1.0), c(1.0), c(0.0), c(1.0));
    println!("=== trefoil, geometric point (expect 27) ===");
    let b3 = Holonomy2x2::new(c(1.0), c(0.0), c(-1.0), c(1.0));
    probe_width2(&f, &a, &b3, one);

    println!("=== figure-eight, hyperbolic point (expect 162) ===");
    let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let b8 = Holonomy2x2::new(one, c(0.0), -zeta, one);
    probe_width3(&f, &a, &b8, one);
}

fn probe_width2(f: &NumField, a: &M, b: &M, mu: Complex64) {
    for sign in [1i8, -1] {
        let word = MorseWord::new(vec![
            SliceKind::CupL(1),
            cross(sign, 0),
            cross(sign, 0),
            cross(sign, 0),
            SliceKind::CapR(1),
        ]);
        for (gn, g) in conjugators(f) {
            let gi = g.inv(f).unwrap();
            let m0 = g.mul(f, a).mul(f, &gi);
            let m1 = g.mul(f, b).mul(f, &gi);
            // braid relation filter
            let lhs = m1.mul(f, &m0).mul(f, &m1);
            let rhs = m0.mul(f, &m1).mul(f, &m0);
            if !lhs.eq(f, &rhs) {
                continue;
            }
            let Ok(x0) = factorize(f, &m0, &mu) else { continue };
            let x0m = lower(f, &x0);
            let Ok(x0mi) = x0m.inv(f) else { continue };
            let Ok(y0) = factorize(f, &x0mi.mul(f, &m1).mul(f, &x0m), &mu) else { continue };
            let mut seeds = Seeds::new();
            seeds.insert((0, 0), x0.clone());
            seeds.insert((1, 1), y0.clone());
            match propagate(f, &word, &seeds) {
                Ok(col) => match evaluate(f, &word, &col, &EvalOptions::default()) {
                    Ok(r) => {
                        let v = f.embed(&r.scalar, &EmbedPoint::mu(mu)).unwrap();
                        println!("  sign {sign:+} conj {gn}: value {v}");
                    }
                    Err(e) => println!("  sign {sign:+} conj {gn}: eval error {e}"),
                },
                Err(e) => println!("  sign {sign:+} conj {gn}: {e:?}"),
            }
        }
    }
}

fn probe_width3(f: &NumField, a: &M, b: &M, mu: Complex64) {
    for (s1, s2) in [(1i8, -1i8), (-1, 1)] {
        let word = MorseWord::new(vec![
            SliceKind::CupL(1),
            SliceKind::CupL(2),
            cross(s1, 0),
            cross(s2, 1),
            cross(s1, 0),
            cross(s2, 1),
            SliceKind::CapR(2),
            SliceKind::CapR(1),
        ]);
        for (gn, g) in conjugators(f) {
            let gi = g.inv(f).unwrap();
            let m0 = g.mul(f, a).mul(f, &gi);
            let m1 = g.mul(f, b).mul(f, &gi);
            let m0i = m0.inv(f).unwrap();
            let m2 = m0i.mul(f, &m1).mul(f, &m0);
            // closure filter: C M2 C^-1 = M0 and M2 C M2^-1 = M1
            let m1i = m1.inv(f).unwrap();
            let cc = m1i.mul(f, &m0).mul(f, &m1);
            let t1 = cc.mul(f, &m2).mul(f, &cc.inv(f).unwrap());
            let t2 = m2.mul(f, &cc).mul(f, &m2.inv(f).unwrap());
            if !t1.eq(f, &m0) || !t2.eq(f, &m1) {
                if gn == "id" {
                    println!("  signs ({s1:+},{s2:+}): closure equations FAIL for (a,b)");
                }
                continue;
            }
            let Ok(x0) = factorize(f, &m0, &mu) else { continue };
            let x0m = lower(f, &x0);
            let Ok(x0mi) = x0m.inv(f) else { continue };
            let Ok(s1c) = factorize(f, &x0mi.mul(f, &m1).mul(f, &x0m), &mu) else { continue };
            let conj2 = x0m.mul(f, &lower(f, &s1c));
            let Ok(conj2i) = conj2.inv(f) else { continue };
            let Ok(s2c) = factorize(f, &conj2i.mul(f, &m2).mul(f, &conj2), &mu) else { continue };
            let mut seeds = Seeds::new();
            seeds.insert((0, 0), x0.clone());
            seeds.insert((1, 1), s1c.clone());
            seeds.insert((2, 2), s2c.clone());
            match propagate(f, &word, &seeds) {
                Ok(col) => match evaluate(f, &word, &col, &EvalOptions::default()) {
                    Ok(r) => {
                        let v = f.embed(&r.scalar, &EmbedPoint::mu(mu)).unwrap();
                        println!("  signs ({s1:+},{s2:+}) conj {gn}: value {v}");
                    }
                    Err(e) => println!("  signs ({s1:+},{s2:+}) conj {gn}: eval error {e}"),
                },
                Err(e) => println!("  signs ({s1:+},{s2:+}) conj {gn}: {e:?}"),
            }
        }
    }
}

fn cross(sign: i8, p: usize) -> SliceKind {
    if sign > 0 {
        SliceKind::Pos(p)
    } else {
        SliceKind::Neg(p)
    }
}
