//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored constant-term first; the zero polynomial is the
//! empty coefficient vector. All arithmetic is exact. Resultants go through
//! a fraction-free subresultant remainder sequence over the integers, which
//! keeps intermediate coefficients small at the degrees this crate works at.

use super::rational::{gcd_all, rat_int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a coefficient list")]
    Parse(String),
}

/// Dense univariate polynomial over the rationals; index i holds the
/// coefficient of t^i.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::from_coeffs(vec![c])
    }

    /// The monomial t.
    pub fn x() -> Self {
        PolyQ::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        PolyQ::from_coeffs(coeffs)
    }

    /// Builds a polynomial, trimming trailing zeros to restore the invariant
    /// that the leading coefficient of a nonzero polynomial is nonzero.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation; exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> PolyQ {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        PolyQ::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &Rational) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division: `self = q*divisor + r` with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ), PolyError> {
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(s_deg) = self.degree() else {
            return Ok((PolyQ::zero(), PolyQ::zero()));
        };
        if s_deg < d_deg {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); s_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let head = rem[i + d_deg].clone();
            if head.is_zero() {
                continue;
            }
            let q = head / &lc;
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                let sub = dj * &q;
                rem[i + j] -= sub;
            }
            quot[i] = q;
        }
        Ok((PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem)))
    }

    /// Divides by the leading coefficient; identity for the zero polynomial.
    pub fn monic(&self) -> PolyQ {
        match self.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = Rational::one() / lc;
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Integer coefficient vector, or None when some denominator is not 1.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        l
    }

    /// Parses the CLI coefficient format: comma-separated, constant term
    /// first, entries either integers or "num/den". `"6,-3,-12,4"` is
    /// 4t^3 - 12t^2 - 3t + 6.
    pub fn parse(s: &str) -> Result<PolyQ, PolyError> {
        let coeffs: Result<Vec<Rational>, _> = s
            .split(',')
            .map(super::rational::parse_rational)
            .collect();
        match coeffs {
            Ok(c) if !c.is_empty() => Ok(PolyQ::from_coeffs(c)),
            _ => Err(PolyError::Parse(s.to_string())),
        }
    }

    /// The CLI coefficient format (constant term first).
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn rational_to_f64(c: &Rational) -> f64 {
    // Good to a ulp for the magnitudes used here; exactness is never needed
    // on the float path.
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        PolyQ::from_coeffs(coeffs)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        PolyQ::from_coeffs(coeffs)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ { (&self).$method(&rhs) }
        }
        impl $trait<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ { (&self).$method(rhs) }
        }
        impl $trait<PolyQ> for &PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ { self.$method(&rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

/// Resultant of f and g under the convention
/// Res(f, g) = lc(f)^{deg g} * prod g(alpha_i) over the roots alpha_i of f.
///
/// Zero inputs yield 0. Denominators are cleared and the computation runs as
/// a fraction-free subresultant remainder sequence over the integers.
pub fn resultant(f: &PolyQ, g: &PolyQ) -> Rational {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    let kf = f.denominator_lcm();
    let kg = g.denominator_lcm();
    let fi: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| c.numer() * (&kf / c.denom()))
        .collect();
    let gi: Vec<BigInt> = g
        .coeffs
        .iter()
        .map(|c| c.numer() * (&kg / c.denom()))
        .collect();
    let res_int = resultant_int(&fi, &gi);
    // Res(k_f f, k_g g) = k_f^{deg g} k_g^{deg f} Res(f, g).
    let scale = kf.pow(dg as u32) * kg.pow(df as u32);
    Rational::new(res_int, scale)
}

/// Discriminant under the convention
/// disc(f) = (-1)^{n(n-1)/2} * Res(f, f') / lc(f), n = deg f.
///
/// Panics if deg f < 1.
pub fn discriminant(f: &PolyQ) -> Rational {
    let n = f.degree().expect("discriminant of the zero polynomial");
    assert!(n >= 1, "discriminant requires degree >= 1");
    if n == 1 {
        return Rational::one();
    }
    let r = resultant(f, &f.derivative());
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -r } else { r };
    signed / f.leading().expect("nonzero")
}

// ---- integer polynomial helpers for the subresultant sequence ----

fn ideg(p: &[BigInt]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn itrim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn ilc(p: &[BigInt]) -> &BigInt {
    p.last().expect("nonzero integer polynomial")
}

fn iscale(p: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    p.iter().map(|c| c * k).collect()
}

fn iexact_div(p: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    p.iter()
        .map(|c| {
            let (q, r) = c.div_rem(k);
            debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
            q
        })
        .collect()
}

fn exact_div_int(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact scalar division in subresultant sequence");
    q
}

/// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b, all over Z.
fn iprem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = ideg(b);
    let lb = ilc(b).clone();
    let mut r = a.to_vec();
    let mut e = ideg(a) as i64 - db as i64 + 1;
    while !r.is_empty() && ideg(&r) >= db {
        let shift = ideg(&r) - db;
        let head = ilc(&r).clone();
        // r <- lc(b)*r - head * x^shift * b
        r = iscale(&r, &lb);
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &head * bj;
        }
        r = itrim(r);
        e -= 1;
    }
    // total multiplier must be lc(b)^{delta+1}
    let mut k = BigInt::one();
    for _ in 0..e.max(0) {
        k *= &lb;
    }
    itrim(iscale(&r, &k))
}

fn icontent(p: &[BigInt]) -> BigInt {
    let g = gcd_all(p);
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn ipow(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// Resultant of two nonzero integer polynomials by the subresultant PRS
/// (Collins/Brown; the formulation in Cohen's algorithm 3.3.7).
fn resultant_int(a0: &[BigInt], b0: &[BigInt]) -> BigInt {
    let mut a = itrim(a0.to_vec());
    let mut b = itrim(b0.to_vec());
    assert!(!a.is_empty() && !b.is_empty(), "resultant of zero polynomial");
    let mut sign = 1i8;
    if ideg(&a) < ideg(&b) {
        if ideg(&a) % 2 == 1 && ideg(&b) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if ideg(&b) == 0 {
        let r = ipow(&b[0], ideg(&a));
        return if sign < 0 { -r } else { r };
    }
    let ca = icontent(&a);
    let cb = icontent(&b);
    a = iexact_div(&a, &ca);
    b = iexact_div(&b, &cb);
    // scalar accumulator t = sign * cont(a)^{deg b} * cont(b)^{deg a}
    let mut t = ipow(&ca, ideg(&b)) * ipow(&cb, ideg(&a));
    if sign < 0 {
        t = -t;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = ideg(&a);
        let db = ideg(&b);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            t = -t;
        }
        let r = iprem(&a, &b);
        a = b;
        let divisor = &g * ipow(&h, delta);
        b = if r.is_empty() {
            Vec::new()
        } else {
            iexact_div(&r, &divisor)
        };
        g = ilc(&a).clone();
        h = if delta == 0 {
            h
        } else {
            exact_div_int(&ipow(&g, delta), &ipow(&h, delta - 1))
        };
        if b.is_empty() {
            // non-trivial gcd upstream means a common root
            return BigInt::zero();
        }
        if ideg(&b) == 0 {
            let q = ideg(&a);
            let h_final = exact_div_int(&ipow(&b[0], q), &ipow(&h, q.saturating_sub(1)));
            return t * h_final;
        }
    }
}
