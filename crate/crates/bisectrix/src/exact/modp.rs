//! Dense univariate polynomials over a prime field F_p, p < 2^63.
//!
//! Just enough finite-field polynomial algebra for Dedekind reductions:
//! ring operations, gcd, and modular exponentiation of t in `F_p[t]/(f)`.

use super::poly::PolyQ;
use super::rational::{is_prime_u64, mod_u64, mul_mod_u64, pow_mod_u64};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModPError {
    #[error("modulus {0} fails the primality check")]
    NotPrime(u64),
    #[error("bad prime {0}: divides a coefficient denominator")]
    BadPrimeDenominator(u64),
    #[error("bad prime {0}: divides the leading numerator (degree would drop)")]
    BadPrimeLeading(u64),
}

/// Polynomial over F_p, constant term first, coefficients reduced to [0, p).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

/// Coefficientwise reduction of a rational polynomial modulo p.
///
/// Fails when p is not prime, divides some coefficient denominator, or
/// divides the leading numerator (the reduction would drop degree, which the
/// cycle-type machinery must never see silently).
pub fn reduce_mod_p(f: &PolyQ, p: u64) -> Result<PolyModP, ModPError> {
    if !is_prime_u64(p) {
        return Err(ModPError::NotPrime(p));
    }
    for c in f.coeffs() {
        if mod_u64(c.denom(), p) == 0 {
            return Err(ModPError::BadPrimeDenominator(p));
        }
    }
    if let Some(lc) = f.leading() {
        if mod_u64(lc.numer(), p) == 0 {
            return Err(ModPError::BadPrimeLeading(p));
        }
    }
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let num = mod_u64(c.numer(), p);
            let den = mod_u64(c.denom(), p);
            mul_mod_u64(num, inv_mod(den, p), p)
        })
        .collect();
    Ok(PolyModP::trimmed(p, coeffs))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod_u64(a, p - 2, p)
}

impl PolyModP {
    /// Builds a polynomial over F_p, reducing the coefficients. The modulus
    /// must pass the deterministic primality check.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self, ModPError> {
        if !is_prime_u64(p) {
            return Err(ModPError::NotPrime(p));
        }
        Ok(Self::trimmed(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn trimmed(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: Vec::new() }
    }

    pub fn x(p: u64) -> Self {
        PolyModP { p, coeffs: vec![0, 1] }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, rhs: &PolyModP) -> PolyModP {
        debug_assert_eq!(self.p, rhs.p);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + rhs.coeff(i)) % self.p)
            .collect();
        PolyModP::trimmed(self.p, coeffs)
    }

    pub fn sub(&self, rhs: &PolyModP) -> PolyModP {
        debug_assert_eq!(self.p, rhs.p);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + self.p - rhs.coeff(i)) % self.p)
            .collect();
        PolyModP::trimmed(self.p, coeffs)
    }

    pub fn mul(&self, rhs: &PolyModP) -> PolyModP {
        debug_assert_eq!(self.p, rhs.p);
        if self.is_zero() || rhs.is_zero() {
            return PolyModP::zero(self.p);
        }
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + mul_mod_u64(a, b, self.p)) % self.p;
            }
        }
        PolyModP::trimmed(self.p, acc)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyModP) -> (PolyModP, PolyModP) {
        debug_assert_eq!(self.p, divisor.p);
        let d_deg = divisor.degree().expect("division by zero polynomial");
        let Some(s_deg) = self.degree() else {
            return (PolyModP::zero(self.p), PolyModP::zero(self.p));
        };
        if s_deg < d_deg {
            return (PolyModP::zero(self.p), self.clone());
        }
        let p = self.p;
        let lc_inv = inv_mod(divisor.leading().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; s_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let head = rem[i + d_deg];
            if head == 0 {
                continue;
            }
            let q = mul_mod_u64(head, lc_inv, p);
            quot[i] = q;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let sub = mul_mod_u64(q, dj, p);
                rem[i + j] = (rem[i + j] + p - sub) % p;
            }
        }
        (PolyModP::trimmed(p, quot), PolyModP::trimmed(p, rem))
    }

    pub fn rem(&self, divisor: &PolyModP) -> PolyModP {
        self.div_rem(divisor).1
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &PolyModP) -> PolyModP {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> PolyModP {
        match self.leading() {
            Some(lc) if lc != 1 => {
                let inv = inv_mod(lc, self.p);
                let coeffs = self
                    .coeffs
                    .iter()
                    .map(|&c| mul_mod_u64(c, inv, self.p))
                    .collect();
                PolyModP::trimmed(self.p, coeffs)
            }
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> PolyModP {
        if self.coeffs.len() <= 1 {
            return PolyModP::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod_u64(c, (i as u64) % self.p, self.p))
            .collect();
        PolyModP::trimmed(self.p, coeffs)
    }

    /// self^exp mod m by repeated squaring in `F_p[t]/(m)`.
    pub fn pow_mod(&self, mut exp: u64, m: &PolyModP) -> PolyModP {
        let mut base = self.rem(m);
        let mut acc = PolyModP::trimmed(self.p, vec![1]);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            exp >>= 1;
        }
        acc
    }

    /// True iff gcd(f, f') is constant.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }
}

impl fmt::Debug for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyModP(p={}, {:?})", self.p, self.coeffs)
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn reduce_examples() {
        let cubic = PolyQ::from_i64(&[6, -3, -12, 4]);
        let r = reduce_mod_p(&cubic, 5).unwrap();
        assert_eq!(r.coeffs(), &[1, 2, 3, 4]); // 4t^3 + 3t^2 + 2t + 1

        let half = PolyQ::from_coeffs(vec![rat(1, 1), rat(1, 2)]);
        assert_eq!(reduce_mod_p(&half, 2), Err(ModPError::BadPrimeDenominator(2)));

        // constant term reduces to zero, degree is preserved
        let f = PolyQ::from_i64(&[7, 0, 1]);
        let r = reduce_mod_p(&f, 7).unwrap();
        assert_eq!(r.coeffs(), &[0, 0, 1]);

        let dropped = PolyQ::from_i64(&[1, 7]);
        assert_eq!(reduce_mod_p(&dropped, 7), Err(ModPError::BadPrimeLeading(7)));

        assert_eq!(reduce_mod_p(&cubic, 4), Err(ModPError::NotPrime(4)));
    }

    #[test]
    fn ring_operations() {
        let p = 7;
        let a = PolyModP::new(p, vec![1, 2, 3]).unwrap();
        let b = PolyModP::new(p, vec![6, 5]).unwrap();
        let prod = a.mul(&b);
        let (q, r) = prod.div_rem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(a.add(&a).sub(&a), a);
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = 5;
        // (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2 = t^3 + t^2 + 3 (mod 5)
        let f = PolyModP::new(p, vec![3, 0, 1, 1]).unwrap();
        assert!(!f.is_squarefree());
        let g = f.gcd(&f.derivative());
        assert_eq!(g.coeffs(), &[4, 1]); // t - 1

        let sq = PolyModP::new(p, vec![1, 0, 1]).unwrap(); // t^2 + 1 = (t-2)(t-3) mod 5
        assert!(sq.is_squarefree());
    }

    #[test]
    fn frobenius_power() {
        let p = 5;
        let m = PolyModP::new(p, vec![1, 0, 1]).unwrap(); // t^2 + 1
        let xq = PolyModP::x(p).pow_mod(p, &m);
        // t^5 = t*(t^2)^2 = t*(-1)^2 = t (mod t^2+1): fixed, consistent with the split factorization
        assert_eq!(xq, PolyModP::x(p).rem(&m));
    }

    #[test]
    fn iterated_frobenius_matches_direct_power() {
        let p = 11;
        // t^4 + t + 3 mod 11, squarefree
        let m = PolyModP::new(p, vec![3, 1, 0, 0, 1]).unwrap();
        let x = PolyModP::x(p);
        let once = x.pow_mod(p, &m);
        let twice = once.pow_mod(p, &m);
        assert_eq!(twice, x.pow_mod(p * p, &m));
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(PolyModP::new(6, vec![1]), Err(ModPError::NotPrime(6)));
        assert!(PolyModP::new(2, vec![1, 1]).is_ok());
    }
}
