//! Symmetric-group certification from factorization degrees mod p.
//!
//! Dedekind's theorem turns factor degrees of f mod p into cycle types of
//! the Galois group. Irreducibility (transitivity) + a prime-length cycle in
//! the Jordan window (primitivity, then A_n by Jordan's theorem) + a
//! non-square discriminant (not inside A_n) together certify S_n — the same
//! evidence chain a computer-algebra black box would hide.
//!
//! ```bash
//! cargo run --example galois_certificate
//! ```

use bisectrix::exact::{rat_int, PolyQ};
use bisectrix::galois::symmetric_group_certificate;
use bisectrix::wolff::WolffData;

fn main() {
    // the headline case: W for bisectors (1, 2, 3) has Galois group S_10
    let data = WolffData::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap();
    let cert = symmetric_group_certificate(&data.w, 500);
    println!("degree-10 polynomial for bisectors (1, 2, 3):");
    println!("  verdict          = {:?}", cert.verdict);
    println!("  irreducibility   = {:?}", cert.irreducibility);
    println!("  long prime cycle = {:?} (prime, cycle length)", cert.long_prime_cycle);
    println!("  disc is square   = {}", cert.discriminant_is_square);
    println!("  primes sampled   = {}", cert.primes_sampled.len());
    println!("  first cycle types:");
    for ct in cert.cycle_types.iter().take(6) {
        println!("    p = {:>3}: {:?}", ct.prime, ct.degrees);
    }

    // guards: an irreducible cubic with square discriminant is cyclic, and
    // must never be certified as the full symmetric group
    let cyclic = PolyQ::from_i64(&[-1, -3, 0, 1]);
    let c = symmetric_group_certificate(&cyclic, 500);
    println!("\nt^3 - 3t - 1: verdict {:?} (disc {} is a square)", c.verdict, c.discriminant);

    let quadratic = PolyQ::from_i64(&[-2, 0, 1]);
    let q = symmetric_group_certificate(&quadratic, 500);
    println!("t^2 - 2:      verdict {:?}", q.verdict);
}
