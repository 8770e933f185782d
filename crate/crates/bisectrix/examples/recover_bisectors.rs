//! Recovering the bisector lengths from their symmetric invariants.
//!
//! The cubic U(t) = t^3 - a2 t^2 + a4 t - a3^2 has roots 1/l_i^2 by Vieta,
//! and V(t) = U(t^2) has roots +-1/l_i. Cardano's formula solves U in
//! radicals of the invariants, so the bisectors themselves are radical
//! expressions in (a2, a3, a4) — the constructive step that transfers the
//! S_10 obstruction from the invariants to the bisector lengths.
//!
//! ```bash
//! cargo run --example recover_bisectors
//! ```

use bisectrix::exact::{rat, rat_int};
use bisectrix::triangle::SymmetricInvariants;
use bisectrix::wolff::{cardano_roots, recover_bisectors, u_polynomial, v_polynomial};

fn main() {
    let l = [rat_int(1), rat_int(2), rat_int(3)];
    let inv = SymmetricInvariants::from_bisectors(&l).unwrap();
    println!("bisectors (1, 2, 3) -> a2 = {}, a3 = {}, a4 = {}", inv.a2, inv.a3, inv.a4);

    let u = u_polynomial(&inv.a2, &inv.a3, &inv.a4);
    let v = v_polynomial(&inv.a2, &inv.a3, &inv.a4);
    println!("U(t) = {u}");
    println!("V(t) = {v}");
    for root in [rat_int(1), rat(1, 4), rat(1, 9)] {
        println!("  U({root}) = {} (exact)", u.eval(&root));
    }
    println!("  V(1/2) = {}, V(-1/2) = {} (exact)", v.eval(&rat(1, 2)), v.eval(&rat(-1, 2)));

    println!("\nCardano roots of U: {:?}", cardano_roots(&u));
    let recovered = recover_bisectors(&inv.a2, &inv.a3, &inv.a4).unwrap();
    println!("recovered bisectors (sorted): {recovered:?}");

    // invariants that no positive triple realizes are rejected
    let bad = recover_bisectors(&rat_int(1), &rat_int(1), &rat_int(1));
    println!("\nunrealizable invariants (1, 1, 1): {bad:?}");
}
