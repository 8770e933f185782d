//! The inverse problem: reconstruct a triangle from its three internal
//! angle-bisector lengths. Every positive triple works.
//!
//! ```bash
//! cargo run --example solve_bisectors
//! ```

use bisectrix::solver::{solve_from_bisectors, SolverConfig};
use bisectrix::triangle::Triangle;

fn main() {
    let config = SolverConfig::default();

    // round trip: take a triangle, forget everything but its bisectors,
    // and get the triangle back
    let original = Triangle::new(3.0, 4.0, 5.0).unwrap();
    let l = original.bisectors();
    println!("bisectors of (3, 4, 5): {l:?}");
    let result = solve_from_bisectors(l, &config).unwrap();
    println!(
        "reconstructed sides:    {:?} (residual {:.2e}, {} iterations, start {})",
        result.triangle.sides(),
        result.residual,
        result.iterations,
        result.start_used
    );

    // the isosceles triple behind the classical non-constructibility proof
    let result = solve_from_bisectors([1.0, 1.0 / 3.0, 1.0 / 3.0], &config).unwrap();
    let t = result.triangle;
    println!("\nbisectors (1, 1/3, 1/3):");
    println!("  sides = {:?}", t.sides());
    println!("  area  = {} (equals tan of half the apex angle)", t.area());

    // an arbitrary positive triple is always realized
    let result = solve_from_bisectors([5.0, 0.3, 2.0], &config).unwrap();
    println!("\nbisectors (5, 0.3, 2):");
    println!("  sides    = {:?}", result.triangle.sides());
    println!("  forward  = {:?}", result.triangle.bisectors());
    println!("  residual = {:.2e}", result.residual);
}
