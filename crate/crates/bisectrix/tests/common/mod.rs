//! Independent oracles shared by the integration test targets. Nothing here
//! touches the implementation paths it is used to check: the resultant
//! oracle is a Sylvester determinant, the factorization oracle is trial
//! division over all monic polynomials, and the root oracle is plain
//! bisection.
//!
//! Each test target uses its own subset.
#![allow(dead_code)]

use bisectrix::exact::{PolyModP, PolyQ, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Resultant as the determinant of the Sylvester matrix, evaluated by
/// fraction-free Bareiss elimination over the integers.
pub fn sylvester_resultant(f: &[i64], g: &[i64]) -> BigInt {
    let f: Vec<BigInt> = trim(f);
    let g: Vec<BigInt> = trim(g);
    assert!(!f.is_empty() && !g.is_empty(), "oracle needs nonzero inputs");
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 {
        return pow(&f[0], n);
    }
    if n == 0 {
        return pow(&g[0], m);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    // rows of f coefficients (highest degree first), then rows of g
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn trim(p: &[i64]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
    while v.last().map(Zero::is_zero).unwrap_or(false) {
        v.pop();
    }
    v
}

fn pow(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Full factorization degrees (with multiplicity) of a polynomial over F_p,
/// by trial division over all monic polynomials of increasing degree.
/// Exponential; intended for deg <= 4 and p <= 13.
pub fn brute_factor_degrees(f: &PolyModP) -> Vec<usize> {
    let p = f.modulus();
    let mut g = f.monic();
    let mut degrees = Vec::new();
    let mut d = 1usize;
    while g.degree().is_some_and(|deg| deg > 0) {
        let remaining = g.degree().unwrap();
        if 2 * d > remaining {
            degrees.push(remaining);
            break;
        }
        // scan the p^d monic polynomials of degree d; divisors found in
        // increasing degree order are automatically irreducible
        let mut found = false;
        let count = (p as u128).pow(d as u32);
        for code in 0..count {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                coeffs.push((c % p as u128) as u64);
                c /= p as u128;
            }
            coeffs.push(1);
            let candidate = PolyModP::new(p, coeffs).expect("prime modulus");
            let (quot, rem) = g.div_rem(&candidate);
            if rem.is_zero() {
                degrees.push(d);
                g = quot;
                found = true;
                break;
            }
        }
        if !found {
            d += 1;
        }
    }
    degrees.sort_unstable();
    degrees
}

/// Plain floating bisection on [lo, hi]; the endpoints must bracket a sign
/// change. Used as the independent root oracle for cubics.
pub fn bisect_f64(f: &PolyQ, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let flo = f.eval_f64(lo);
    assert!(
        (flo <= 0.0) != (f.eval_f64(hi) <= 0.0),
        "oracle bracket must straddle a sign change"
    );
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if (f.eval_f64(mid) <= 0.0) == (flo <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Relative error helper; falls back to absolute near zero.
pub fn rel_err(got: f64, want: f64) -> f64 {
    let scale = want.abs().max(1e-300);
    (got - want).abs() / scale
}

/// Exact check that a rational is in canonical form.
pub fn is_canonical(x: &Rational) -> bool {
    use num_integer::Integer;
    x.denom().is_positive() && x.numer().gcd(x.denom()) == BigInt::from(1)
}
