// Development probe: inspect propagate failures on the trefoil word.
use kare::characters::*;
use kare::diagram::*;
use kare::scalars::{Field, NumField};
use num::complex::Complex64;

fn main() {
    let f = NumField::new(3, 1e-9);
    let one = Complex64::new(1.0, 0.0);
    let a = Holonomy2x2::new(one, one, Complex64::new(0.0, 0.0), one);
    let b = Holonomy2x2::new(one, Complex64::new(0.0, 0.0), -one, one);
    let x0 = factorize(&f, &a, &one).unwrap();
    println!("x0: kappa={} eps={} phi={}", x0.kappa, x0.eps, x0.phi);
    let x0m = lower(&f, &x0);
    let x0mi = x0m.inv(&f).unwrap();
    for (nm, w) in [("b", b.clone()), ("binv", b.inv(&f).unwrap())] {
        let g = x0mi.mul(&f, &w).mul(&f, &x0m);
        let Ok(y0) = factorize(&f, &g, &one) else {
            println!("w={nm}: factorize failed");
            continue;
        };
        println!("w={nm}: y0 kappa={} eps={} phi={}", y0.kappa, y0.eps, y0.phi);
        for sign in [1i8, -1] {
            let word = MorseWord::new(vec![
                SliceKind::CupL(1),
                if sign > 0 { SliceKind::Pos(0) } else { SliceKind::Neg(0) },
                if sign > 0 { SliceKind::Pos(0) } else { SliceKind::Neg(0) },
                if sign > 0 { SliceKind::Pos(0) } else { SliceKind::Neg(0) },
                SliceKind::CapR(1),
            ]);
            let mut seeds = Seeds::new();
            seeds.insert((0, 0), x0.clone());
            seeds.insert((1, 1), y0.clone());
            match propagate(&f, &word, &seeds) {
                Ok(col) => {
                    println!("  sign {sign:+}: CLOSED, sections:");
                    for (i, sec) in col.sections.iter().enumerate() {
                        let desc: Vec<String> = sec
                            .iter()
                            .map(|c| format!("(k={:.3} e={:.3} p={:.3})", c.kappa, c.eps, c.phi))
                            .collect();
                        println!("    {i}: {}", desc.join(" "));
                    }
                }
                Err(e) => println!("  sign {sign:+}: {e:?}"),
            }
        }
    }
}
