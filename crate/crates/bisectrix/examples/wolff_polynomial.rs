//! The degree-10 Wolff polynomial W(t) with exact rational coefficients,
//! and the identity it encodes: 1/(2r) is a root, where r is the inradius
//! of the triangle with the given bisector lengths.
//!
//! ```bash
//! cargo run --example wolff_polynomial
//! ```

use bisectrix::exact::{rat, rat_int};
use bisectrix::solver::SolverConfig;
use bisectrix::wolff::{check_incircle_root, WolffData};

fn main() {
    let data = WolffData::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap();
    println!("bisectors (1, 2, 3):");
    println!("  a2 = {}", data.a2);
    println!("  a3 = {}", data.a3);
    println!("  a4 = {}", data.a4);
    println!("  W(t) = {}", data.w);
    println!("  coefficients (constant first): {}", data.w.to_coeff_string());

    // the equilateral case is exact: l = (1,1,1) has r = 1/3, and W(3/2) = 0
    // in rational arithmetic, no tolerance involved
    let eq = WolffData::from_invariants(rat_int(3), rat_int(1), rat_int(3));
    println!("\nequilateral invariants (3, 1, 3):");
    println!("  W(3/2) = {}", eq.w.eval(&rat(3, 2)));

    // floating re-check through the inverse solver
    let config = SolverConfig::default();
    for l in [[1.0, 1.0, 1.0], [1.0, 2.0, 3.0], [1.0, 1.0 / 3.0, 1.0 / 3.0]] {
        let residual = check_incircle_root(l, &config).unwrap();
        println!("normalized |W(1/(2r))| for bisectors {l:?} = {residual:.3e}");
    }
}
