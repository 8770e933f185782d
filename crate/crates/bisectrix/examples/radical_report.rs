//! The full radical-solvability argument for a rational bisector triple,
//! with every step of the evidence chain spelled out.
//!
//! ```bash
//! cargo run --example radical_report
//! ```

use bisectrix::exact::{rat, rat_int};
use bisectrix::galois::radical_solvability_report;

fn main() {
    let report = radical_solvability_report(&[rat_int(1), rat_int(2), rat_int(3)], 500);
    println!("bisectors (1, 2, 3): verdict {:?}\n", report.verdict);
    for (i, step) in report.narrative.iter().enumerate() {
        println!("{}. {step}\n", i + 1);
    }

    // the equilateral triple is the degenerate counterpoint: its polynomial
    // is reducible and the inradius is plainly rational in the bisector
    let report = radical_solvability_report(&[rat_int(1), rat_int(1), rat_int(1)], 500);
    println!("bisectors (1, 1, 1): verdict {:?}", report.verdict);
    println!("rational roots of the specialized polynomial: {:?}", report.rational_roots);

    // the non-constructible isosceles triple also specializes reducibly
    // (t = 1 is an extraneous root), so the S_10 route says nothing here —
    // its impossibility argument is the degree-3 cubic, not this polynomial
    let report = radical_solvability_report(&[rat_int(1), rat(1, 3), rat(1, 3)], 500);
    println!("\nbisectors (1, 1/3, 1/3): verdict {:?}", report.verdict);
    println!("rational roots of the specialized polynomial: {:?}", report.rational_roots);
}
