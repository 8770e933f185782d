//! Ruler-and-compass verdicts from minimal-polynomial degrees.
//!
//! A length constructible from the unit segment has minimal polynomial of
//! power-of-two degree. Certified irreducibility of degree 3 is therefore a
//! proof of non-constructibility; the engine answers Unknown whenever its
//! evidence falls short (power-of-two degree is necessary, not sufficient).
//!
//! ```bash
//! cargo run --example constructibility
//! ```

use bisectrix::exact::PolyQ;
use bisectrix::galois::{constructibility_verdict, eisenstein_check};

fn main() {
    // sin(beta/2) of the isosceles triangle with bisectors (1, 1/3, 1/3)
    let cubic = PolyQ::from_i64(&[6, -3, -12, 4]);
    println!("f = {cubic}");
    println!("  Eisenstein witness: p = {:?}", eisenstein_check(&cubic));
    let v = constructibility_verdict(&cubic);
    println!("  verdict: {:?}", v.verdict);
    println!("  reason:  {}", v.reason);

    // sqrt(2) is the classic constructible irrational
    let sqrt2 = PolyQ::from_i64(&[-2, 0, 1]);
    let v = constructibility_verdict(&sqrt2);
    println!("\nf = {sqrt2}\n  verdict: {:?} ({})", v.verdict, v.reason);

    // t^4 + 1 is irreducible over Q but reducible mod every prime; the
    // engine cannot certify it and must say so
    let quartic = PolyQ::from_i64(&[1, 0, 0, 0, 1]);
    let v = constructibility_verdict(&quartic);
    println!("\nf = {quartic}\n  verdict: {:?} ({})", v.verdict, v.reason);
}
