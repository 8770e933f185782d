//! The isosceles specialization: for apex bisector 1 and base bisectors rho,
//! the half base angle beta satisfies a cubic in x = sin(beta/2). At
//! rho = 1/3 this is the classical 4x^3 - 12x^2 - 3x + 6, irreducible of
//! degree 3 — which is exactly why the triangle (and a square of its area)
//! cannot be built by ruler and compass.
//!
//! ```bash
//! cargo run --example isosceles_cubic
//! ```

use bisectrix::exact::rat;
use bisectrix::solver::{cubic_for_isosceles, isosceles_solve, solve_from_bisectors, SolverConfig};

fn main() {
    for rho in [rat(1, 3), rat(1, 1), rat(2, 1)] {
        let cubic = cubic_for_isosceles(&rho).unwrap();
        println!("rho = {rho}: cubic {cubic}");
    }

    let sol = isosceles_solve(&rat(1, 3)).unwrap();
    println!("\nrho = 1/3 (bisectors 1, 1/3, 1/3):");
    println!("  x = sin(beta/2) = {}", sol.sin_half_base);
    println!("  beta            = {} rad", sol.beta);
    println!("  alpha           = {} rad", sol.alpha);
    println!("  area            = tan(alpha/2) = {}", sol.area_factor);

    // the angle relation the cubic encodes: sin(3 beta / 2) = 6 cos(beta)
    let residual = (1.5 * sol.beta).sin() - 6.0 * sol.beta.cos();
    println!("  sin(3b/2) - 6 cos b = {residual:.3e}");

    // cross-check against the general solver
    let solved = solve_from_bisectors([1.0, 1.0 / 3.0, 1.0 / 3.0], &SolverConfig::default())
        .unwrap();
    println!(
        "  full solver area    = {} (difference {:.3e})",
        solved.triangle.area(),
        (solved.triangle.area() - sol.area_factor).abs()
    );
}
