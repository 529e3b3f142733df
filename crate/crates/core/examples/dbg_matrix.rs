// Development probe: dump the final 9x9 matrix of the trefoil composite to
// see how it deviates from scalar * identity.
use kare::bimodule::braiding;
use kare::characters::*;
use kare::diagram::*;
use kare::scalars::{Field, NumField};
use num::complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn main() {
    let f = NumField::new(3, 1e-9);
    let one = c(1.0);
    let a0 = Holonomy2x2::new(c(1.0), c(1.0), c(0.0), c(1.0));
    let b0 = Holonomy2x2::new(c(1.0), c(0.0), c(-1.0), c(1.0));
    // conjugate by u(-1)
    let g = Holonomy2x2::new(c(1.0), c(-1.0), c(0.0), c(1.0));
    let gi = g.inv(&f).unwrap();
    let m0 = g.mul(&f, &a0).mul(&f, &gi);
    let m1 = g.mul(&f, &b0).mul(&f, &gi);
    let x0 = factorize(&f, &m0, &one).unwrap();
    let x0m = lower(&f, &x0);
    let y0 =
        factorize(&f, &x0m.inv(&f).unwrap().mul(&f, &m1).mul(&f, &x0m), &one).unwrap();
    let word = MorseWord::new(vec![
        SliceKind::CupL(1),
        SliceKind::Pos(0),
        SliceKind::Pos(0),
        SliceKind::Pos(0),
        SliceKind::CapR(1),
    ]);
    let mut seeds = Seeds::new();
    seeds.insert((0, 0), x0.clone());
    seeds.insert((1, 1), y0.clone());
    let col = propagate(&f, &word, &seeds).unwrap();

    // manual composition: input basis b at leg 0, cup pairs at legs 1, 2
    let ell2 = 9usize;
    let b1 = braiding(&f, 1, &col.sections[1][0], &col.sections[1][1]).unwrap();
    let b2 = braiding(&f, 1, &col.sections[2][0], &col.sections[2][1]).unwrap();
    let b3 = braiding(&f, 1, &col.sections[3][0], &col.sections[3][1]).unwrap();
    use kare::bimodule::SimpleBimodule;
    let mtop = SimpleBimodule::new(&f, &col.sections[4][0]).unwrap();
    let piv_inv = mtop.left_mul_cols(&f, &mtop.pivotal_inv(&f));
    let mut t = vec![vec![Complex64::new(0.0, 0.0); ell2]; ell2];
    for input in 0..ell2 {
        // state over (leg0, leg1) with dual leg j fixed per branch
        for j in 0..ell2 {
            // initial (input, j), dual j
            let mut state = vec![(input, j, Complex64::new(1.0, 0.0))];
            for bm in [&b1, &b2, &b3] {
                let mut next = std::collections::BTreeMap::new();
                for (p, q, v) in &state {
                    for (out, w) in &bm.cols[p * ell2 + q] {
                        let x = (*out as usize) / ell2;
                        let y = (*out as usize) % ell2;
                        *next.entry((x, y)).or_insert(Complex64::new(0.0, 0.0)) += v * w;
                    }
                }
                state = next.into_iter().map(|((x, y), v)| (x, y, v)).collect();
            }
            // cap: (leg1 = v index, dual = j): f(K^(1-ell) v) = Pinv[v -> j]
            for (p, q, v) in &state {
                let coef: Complex64 = piv_inv[*q]
                    .iter()
                    .filter(|(r, _)| *r as usize == j)
                    .map(|(_, w)| *w)
                    .sum();
                t[*p][input] += v * coef;
            }
        }
    }
    println!("final matrix:");
    for row in &t {
        let s: Vec<String> = row.iter().map(|z| format!("{:6.2}{:+6.2}i", z.re, z.im)).collect();
        println!("  {}", s.join(" "));
    }
}
