// Development probe: determine the Artin-type action on canonical meridians
// induced by the crossing map. Bottom meridians (approach below-left):
//   M0 = psi(u),  M1 = u^- psi(v) (u^-)^-1
// Top meridians for output colors (chi4 left, chi3 right):
//   N0 = psi(chi4),  N1 = chi4^- psi(chi3) (chi4^-)^-1
// Search small words in M0, M1 matching N0, N1.
use kare::characters::*;
use kare::scalars::{CycField, Field};

fn main() {
    let f = CycField::new(3);
    // exact random-ish characters with matching mu
    let mk = |kappa: i64, eps: i64, mu: i64| {
        let kappa = f.from_i64(kappa);
        let eps = f.from_i64(eps);
        let mu = f.from_i64(mu);
        let ki = f.inv(&kappa).unwrap();
        let t = f.add(&f.pow(&mu, 3).unwrap(), &f.pow(&mu, -3).unwrap());
        let phi = f.div(&f.mul(&f.sub(&f.add(&kappa, &ki), &t), &kappa), &eps).unwrap();
        CentralCharacter::new(&f, kappa, eps, phi, mu).unwrap()
    };
    let u = mk(2, 3, 2);
    let v = mk(5, -2, 2);
    for sign in [1i8, -1i8] {
        let (c3, c4) = crossing_map(&f, sign, &u, &v).unwrap();
        let m0 = defactorize(&f, &u);
        let um = lower(&f, &u);
        let umi = um.inv(&f).unwrap();
        let m1 = um.mul(&f, &defactorize(&f, &v)).mul(&f, &umi);
        let n0 = defactorize(&f, &c4);
        let w4m = lower(&f, &c4);
        let w4mi = w4m.inv(&f).unwrap();
        let n1 = w4m.mul(&f, &defactorize(&f, &c3)).mul(&f, &w4mi);
        let m0i = m0.inv(&f).unwrap();
        let m1i = m1.inv(&f).unwrap();
        let cands: Vec<(&str, Holonomy2x2<CycField>)> = vec![
            ("M0", m0.clone()),
            ("M1", m1.clone()),
            ("M0 M1 M0^-1", m0.mul(&f, &m1).mul(&f, &m0i)),
            ("M0^-1 M1 M0", m0i.mul(&f, &m1).mul(&f, &m0)),
            ("M1 M0 M1^-1", m1.mul(&f, &m0).mul(&f, &m1i)),
            ("M1^-1 M0 M1", m1i.mul(&f, &m0).mul(&f, &m1)),
        ];
        for (nm, c) in &cands {
            if c.eq(&f, &n0) {
                println!("sign {sign:+}: N0 = {nm}");
            }
            if c.eq(&f, &n1) {
                println!("sign {sign:+}: N1 = {nm}");
            }
        }
    }
}
