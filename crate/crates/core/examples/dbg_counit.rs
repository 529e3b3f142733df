// debug: inspect counit contraction
use kare::bimodule::*;
use kare::characters::*;
use kare::scalars::{CycField, Field};
fn main() {
    let f = CycField::new(3);
    let chi1 = CentralCharacter::new(&f, f.from_i64(8), f.zero(), f.zero(), f.from_i64(2)).unwrap();
    // fixed chi2: kappa 2, eps 1, mu 1, phi solved
    let kappa = f.from_i64(2);
    let eps = f.from_i64(1);
    let mu = f.one();
    let ki = f.inv(&kappa).unwrap();
    let t2 = f.from_i64(2);
    let phi = f.div(&f.mul(&f.sub(&f.add(&kappa, &ki), &t2), &kappa), &eps).unwrap();
    let chi2 = CentralCharacter::new(&f, kappa, eps, phi, mu).unwrap();
    let (chi3, chi4) = crossing_map(&f, 1, &chi1, &chi2).unwrap();
    println!("chi3 kappa={} eps={} phi={}", f.render(&chi3.kappa), f.render(&chi3.eps), f.render(&chi3.phi));
    println!("chi4 kappa={} eps={} phi={}", f.render(&chi4.kappa), f.render(&chi4.eps), f.render(&chi4.phi));
    let m3 = SimpleBimodule::new(&f, &chi3).unwrap();
    let m4 = SimpleBimodule::new(&f, &chi4).unwrap();
    println!("m3 kind {:?}, m4 kind {:?}", m3.kind, m4.kind);
}
