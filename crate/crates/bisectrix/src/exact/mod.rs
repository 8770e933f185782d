//! Exact arithmetic substrate: arbitrary-precision rationals and univariate
//! polynomials over Q and over prime fields.

pub mod modp;
pub mod poly;
pub mod rational;

pub use modp::{reduce_mod_p, ModPError, PolyModP};
pub use poly::{discriminant, rational_to_f64, resultant, PolyError, PolyQ};
pub use rational::{
    is_prime_u64, is_square, parse_rational, primes_up_to, rat, rat_int, rational_from_f64,
    sqrt_with_digits, to_decimal_string, ParseRationalError, Rational,
};
