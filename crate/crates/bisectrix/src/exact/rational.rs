//! Exact rational scalars and the small number-theoretic helpers the rest of
//! the crate leans on: parsing, square testing, high-precision square roots
//! and deterministic primality for `u64`.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form we require (reduced, positive denominator).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision rational number in canonical form.
pub type Rational = num_rational::BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integer constants.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact conversion of a finite `f64` into a rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Parses "num/den" or a plain integer, e.g. `49/36`, `-3`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError(s.to_string()));
    }
    match s.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| ParseRationalError(s.into()))?;
            let den = BigInt::from_str(den.trim()).map_err(|_| ParseRationalError(s.into()))?;
            if den.is_zero() {
                return Err(ParseRationalError(s.into()));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(s).map_err(|_| ParseRationalError(s.into()))?;
            Ok(Rational::from_integer(num))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as a rational (expected \"num/den\" or an integer)")]
pub struct ParseRationalError(pub String);

/// True iff `x` is the square of a rational. Negative values are never
/// squares; zero is. Decided by exact integer square roots of the canonical
/// numerator and denominator.
pub fn is_square(x: &Rational) -> bool {
    if x.is_negative() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    is_square_int(x.numer()) && is_square_int(x.denom())
}

fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Floor approximation of sqrt(x) accurate to `digits` decimal digits.
///
/// Computed as an exact integer square root of a scaled integer, so the
/// result never depends on floating point. Panics if `x` is negative.
pub fn sqrt_with_digits(x: &Rational, digits: u32) -> Rational {
    assert!(!x.is_negative(), "sqrt_with_digits: negative input");
    if x.is_zero() {
        return Rational::zero();
    }
    let scale = BigInt::from(10u32).pow(digits);
    // sqrt(n/d) = sqrt(n*d)/d; scale before the integer sqrt.
    let scaled = x.numer() * x.denom() * &scale * &scale;
    let root = scaled.sqrt();
    Rational::new(root, x.denom() * scale)
}

/// Decimal rendering of a rational, truncated toward zero at `digits`
/// fractional digits. Exact up to the truncation; never goes through
/// floating point.
pub fn to_decimal_string(x: &Rational, digits: u32) -> String {
    let negative = x.is_negative();
    let abs = x.abs();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (abs.numer() * &scale).div_floor(abs.denom());
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part,
        width = digits as usize
    )
}

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin, valid for all `n < 2^64` with this witness set.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in MR_WITNESSES.iter() {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// All primes up to and including `bound`, by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Residue of an arbitrary-precision integer modulo a small prime.
pub fn mod_u64(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    let (sign, digits) = m.to_u64_digits();
    match sign {
        Sign::NoSign => 0,
        Sign::Plus => digits[0],
        Sign::Minus => unreachable!("mod_floor is non-negative for positive modulus"),
    }
}

/// gcd of the absolute values of a slice of integers; zero for an empty slice.
pub fn gcd_all(values: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("49/36").unwrap(), rat(49, 36));
        assert_eq!(parse_rational("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rational(" 1 / 2 ").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_form_is_maintained() {
        let x = Rational::new(BigInt::from(-4), BigInt::from(-6));
        assert_eq!(x, rat(2, 3));
        assert!(x.denom() > &BigInt::zero());
        assert!(x.numer().gcd(x.denom()).is_one());
    }

    #[test]
    fn square_tests() {
        assert!(is_square(&rat_int(81)));
        assert!(!is_square(&rat_int(8)));
        assert!(is_square(&rat(4, 9)));
        assert!(is_square(&Rational::zero()));
        assert!(!is_square(&rat_int(-4)));
        assert!(!is_square(&rat(2, 9)));
    }

    #[test]
    fn high_precision_sqrt() {
        let two = rat_int(2);
        let s = sqrt_with_digits(&two, 50);
        // |s^2 - 2| < 3*10^-50 (floor error at most one ulp of the scale)
        let err = (&s * &s - two).abs();
        let bound = Rational::new(BigInt::from(3), BigInt::from(10u32).pow(49));
        assert!(err < bound, "err = {err}");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal_string(&rat(3, 2), 4), "1.5000");
        assert_eq!(to_decimal_string(&rat(-1, 3), 6), "-0.333333");
        assert_eq!(to_decimal_string(&rat(22, 7), 0), "3");
        assert_eq!(to_decimal_string(&rat_int(42), 2), "42.00");
        assert_eq!(to_decimal_string(&rat(1, 1024), 5), "0.00097");
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(is_prime_u64(499));
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn mod_of_negative_is_nonnegative() {
        assert_eq!(mod_u64(&BigInt::from(-12), 5), 3);
        assert_eq!(mod_u64(&BigInt::from(-3), 5), 2);
        assert_eq!(mod_u64(&BigInt::from(6), 5), 1);
    }
}
