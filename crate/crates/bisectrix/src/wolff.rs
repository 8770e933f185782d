//! The Wolff polynomial and its companions.
//!
//! For a triangle with internal bisectors l_a, l_b, l_c put
//!
//!   a2 = sum 1/l_i^2,  a3 = prod 1/l_i,  a4 = sum_{i<j} 1/(l_i l_j)^2.
//!
//! Wolff's 1937 result is that 1/(2r), r the inradius, satisfies a monic
//! degree-10 polynomial W(t) with coefficients polynomial in a2, a3, a4.
//! The auxiliary cubic U(t) = t^3 - a2 t^2 + a4 t - a3^2 has roots 1/l_i^2
//! (Vieta), and V(t) = U(t^2) has roots +-1/l_i, which is what makes the
//! bisectors recoverable from the invariants by radicals.

use crate::exact::{discriminant, rat, rat_int, rational_to_f64, PolyQ, Rational};
use crate::solver::{solve_from_bisectors, SolveError, SolverConfig};
use crate::triangle::invariants_f64;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WolffError {
    #[error("NonPositiveRoots: the invariants are not realized by a positive bisector triple")]
    NonPositiveRoots,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// W, U and V for one triple of invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct WolffData {
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    /// Monic, degree 10, zero t^9 coefficient.
    pub w: PolyQ,
    /// Monic cubic with roots 1/l_i^2.
    pub u: PolyQ,
    /// V(t) = U(t^2); only even-degree terms.
    pub v: PolyQ,
}

impl WolffData {
    pub fn from_invariants(a2: Rational, a3: Rational, a4: Rational) -> Self {
        WolffData {
            w: wolff_polynomial(&a2, &a3, &a4),
            u: u_polynomial(&a2, &a3, &a4),
            v: v_polynomial(&a2, &a3, &a4),
            a2,
            a3,
            a4,
        }
    }

    pub fn from_bisectors(l: &[Rational; 3]) -> Result<Self, crate::triangle::TriangleError> {
        let inv = crate::triangle::SymmetricInvariants::from_bisectors(l)?;
        Ok(Self::from_invariants(inv.a2, inv.a3, inv.a4))
    }
}

/// The monic degree-10 polynomial satisfied by 1/(2r), with exact rational
/// coefficients. Transcribed once and pinned by the exact equilateral zero
/// W(3/2) = 0 at (a2, a3, a4) = (3, 1, 3); any failure of that test flags
/// the transcription for cross-checking against the 1937 source rather than
/// silent patching.
pub fn wolff_polynomial(a2: &Rational, a3: &Rational, a4: &Rational) -> PolyQ {
    let a2_2 = a2 * a2;
    let a2_3 = &a2_2 * a2;
    let a2_4 = &a2_3 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = &a3_2 * a3;
    let c8 = rat(-5, 2) * a2;
    let c7 = rat(7, 2) * a3;
    let c6 = rat(33, 16) * &a2_2;
    let c5 = rat(-47, 8) * a2 * a3;
    let c4 = rat(1, 4) * a2 * a4 - rat(5, 8) * &a2_3 + rat(61, 16) * &a3_2;
    let c3 = rat(5, 2) * &a2_2 * a3 - rat(1, 4) * a4 * a3;
    let c2 = rat(1, 16) * &a2_4 - rat(1, 4) * &a2_2 * a4 - rat(25, 8) * a2 * &a3_2;
    let c1 = rat(1, 2) * a2 * a3 * a4 - rat(1, 8) * &a2_3 * a3 + rat(5, 4) * &a3_3;
    let c0 = rat(1, 16) * &a2_2 * &a3_2 - rat(1, 4) * a4 * &a3_2;
    PolyQ::from_coeffs(vec![
        c0,
        c1,
        c2,
        c3,
        c4,
        c5,
        c6,
        c7,
        c8,
        Rational::zero(),
        Rational::one(),
    ])
}

/// U(t) = t^3 - a2 t^2 + a4 t - a3^2; by Vieta its roots are 1/l_i^2.
pub fn u_polynomial(a2: &Rational, a3: &Rational, a4: &Rational) -> PolyQ {
    PolyQ::from_coeffs(vec![
        -(a3 * a3),
        a4.clone(),
        -a2.clone(),
        Rational::one(),
    ])
}

/// V(t) = U(t^2), with roots +-1/l_i.
pub fn v_polynomial(a2: &Rational, a3: &Rational, a4: &Rational) -> PolyQ {
    PolyQ::from_coeffs(vec![
        -(a3 * a3),
        Rational::zero(),
        a4.clone(),
        Rational::zero(),
        -a2.clone(),
        Rational::zero(),
        Rational::one(),
    ])
}

/// The Wolff coefficients in double precision, constant term first, for the
/// floating pipeline.
pub fn wolff_coeffs_f64(a2: f64, a3: f64, a4: f64) -> [f64; 11] {
    [
        a2 * a2 * a3 * a3 / 16.0 - a4 * a3 * a3 / 4.0,
        a2 * a3 * a4 / 2.0 - a2.powi(3) * a3 / 8.0 + 1.25 * a3.powi(3),
        a2.powi(4) / 16.0 - a2 * a2 * a4 / 4.0 - 25.0 / 8.0 * a2 * a3 * a3,
        2.5 * a2 * a2 * a3 - a4 * a3 / 4.0,
        a2 * a4 / 4.0 - 0.625 * a2.powi(3) + 61.0 / 16.0 * a3 * a3,
        -47.0 / 8.0 * a2 * a3,
        33.0 / 16.0 * a2 * a2,
        3.5 * a3,
        -2.5 * a2,
        0.0,
        1.0,
    ]
}

/// |W(t)| normalized by the largest monomial magnitude, in double precision.
pub fn wolff_residual_f64(a2: f64, a3: f64, a4: f64, t: f64) -> f64 {
    let coeffs = wolff_coeffs_f64(a2, a3, a4);
    let mut value = 0.0;
    let mut scale = 0.0f64;
    let mut power = 1.0;
    for c in coeffs {
        let monomial = c * power;
        value += monomial;
        scale = scale.max(monomial.abs());
        power *= t;
    }
    value.abs() / scale
}

/// Solves the triangle with the given bisector lengths and evaluates W at
/// 1/(2r). Returns the normalized residual, which is the crate's floating
/// re-check of the incircle-root identity.
pub fn check_incircle_root(l: [f64; 3], config: &SolverConfig) -> Result<f64, SolveError> {
    let solved = solve_from_bisectors(l, config)?;
    let r = solved.triangle.inradius();
    let [a2, a3, a4] = invariants_f64(l);
    Ok(wolff_residual_f64(a2, a3, a4, 1.0 / (2.0 * r)))
}

/// All three complex roots of a cubic with rational coefficients.
///
/// The discriminant is classified exactly before any floating point: three
/// distinct real roots go through the trigonometric form (avoiding complex
/// radicals in the casus irreducibilis), repeated roots are produced exactly
/// from the rational double/triple root formulas, and the one-real-root case
/// uses the Cardano radicals. Real roots come first, sorted ascending.
///
/// Panics unless deg f = 3.
pub fn cardano_roots(f: &PolyQ) -> [Complex64; 3] {
    assert_eq!(f.degree(), Some(3), "cardano_roots requires a cubic");
    let a = f.coeff(3);
    let b = f.coeff(2);
    let c = f.coeff(1);
    let d = f.coeff(0);
    // depressed form: t = y - b/(3a), y^3 + p y + q
    let shift = &b / (rat_int(3) * &a);
    let p = (&c / &a) - (&b * &b) / (rat_int(3) * &a * &a);
    let q = rat_int(2) * (&b * &b * &b) / (rat_int(27) * &a * &a * &a)
        - (&b * &c) / (rat_int(3) * &a * &a)
        + &d / &a;
    let disc = discriminant(f); // sign matches -4p^3 - 27q^2 up to lc scaling
    let shift_f = rational_to_f64(&shift);
    let pf = rational_to_f64(&p);
    let qf = rational_to_f64(&q);

    let mut roots = if disc.is_zero() {
        // repeated roots are rational and produced exactly; never polished
        if p.is_zero() {
            let r = -shift_f;
            [Complex64::new(r, 0.0); 3]
        } else {
            // double root -3q/(2p), simple root 3q/p
            let double = rat(-3, 2) * &q / &p;
            let simple = rat_int(3) * &q / &p;
            let dr = rational_to_f64(&(double - &shift));
            let sr = rational_to_f64(&(simple - &shift));
            [
                Complex64::new(dr, 0.0),
                Complex64::new(dr, 0.0),
                Complex64::new(sr, 0.0),
            ]
        }
    } else if disc.is_positive() {
        // three distinct real roots: trigonometric method
        let m = 2.0 * (-pf / 3.0).sqrt();
        let theta = (3.0 * qf / (2.0 * pf) * (-3.0 / pf).sqrt()).clamp(-1.0, 1.0).acos() / 3.0;
        let mut ys = [0.0f64; 3];
        for (k, y) in ys.iter_mut().enumerate() {
            *y = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
        }
        ys.map(|y| Complex64::new(polish_real_root(f, y - shift_f), 0.0))
    } else {
        // one real root: Cardano radicals, cube-root sign chosen to avoid
        // cancellation
        let s = (qf * qf / 4.0 + pf * pf * pf / 27.0).sqrt();
        let u_arg = -qf / 2.0 + if qf <= 0.0 { s } else { -s };
        let u = u_arg.cbrt();
        let v = if u == 0.0 { 0.0 } else { -pf / (3.0 * u) };
        let real = polish_real_root(f, u + v - shift_f);
        let re = -(u + v) / 2.0 - shift_f;
        let im = (u - v) * 3.0f64.sqrt() / 2.0;
        [
            Complex64::new(real, 0.0),
            Complex64::new(re, im.abs()),
            Complex64::new(re, -im.abs()),
        ]
    };
    roots.sort_by(|x, y| {
        (x.im != 0.0)
            .cmp(&(y.im != 0.0))
            .then(x.re.total_cmp(&y.re))
            .then(y.im.total_cmp(&x.im))
    });
    roots
}

fn polish_real_root(f: &PolyQ, x0: f64) -> f64 {
    let df = f.derivative();
    let mut x = x0;
    for _ in 0..2 {
        let fx = f.eval_f64(x);
        let dfx = df.eval_f64(x);
        if dfx == 0.0 || !fx.is_finite() {
            break;
        }
        let step = fx / dfx;
        if !step.is_finite() || step.abs() > 1e-2 * x.abs().max(1.0) {
            break; // polishing must not move a root materially
        }
        x -= step;
    }
    x
}

/// Recovers the sorted bisector lengths from the symmetric invariants by
/// solving U exactly (Cardano) and taking l_i = 1/sqrt(root). The negative
/// square roots are the mirror root set of V and are discarded. Fails with
/// `NonPositiveRoots` when U does not have three positive real roots, i.e.
/// the invariants are not realizable.
pub fn recover_bisectors(
    a2: &Rational,
    a3: &Rational,
    a4: &Rational,
) -> Result<[f64; 3], WolffError> {
    let u = u_polynomial(a2, a3, a4);
    let roots = cardano_roots(&u);
    let mut inv_sq = [0.0f64; 3];
    for (slot, root) in inv_sq.iter_mut().zip(roots.iter()) {
        if root.im != 0.0 || root.re <= 0.0 {
            return Err(WolffError::NonPositiveRoots);
        }
        *slot = root.re;
    }
    let mut l = inv_sq.map(|x| 1.0 / x.sqrt());
    l.sort_by(f64::total_cmp);
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::triangle::SymmetricInvariants;

    #[test]
    fn equilateral_exact_zero() {
        // l = (1,1,1): r = 1/3, so W(3/2) must vanish identically
        let w = wolff_polynomial(&rat_int(3), &rat_int(1), &rat_int(3));
        assert!(w.eval(&rat(3, 2)).is_zero());
    }

    #[test]
    fn wolff_shape() {
        let w = wolff_polynomial(&rat(49, 36), &rat(1, 6), &rat(7, 18));
        assert_eq!(w.degree(), Some(10));
        assert_eq!(w.leading().unwrap(), &rat_int(1));
        assert!(w.coeff(9).is_zero());
        assert_eq!(w.coeff(8), rat(-5, 2) * rat(49, 36));
    }

    #[test]
    fn u_and_v_vieta_examples() {
        let inv =
            SymmetricInvariants::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap();
        let u = u_polynomial(&inv.a2, &inv.a3, &inv.a4);
        for root in [rat_int(1), rat(1, 4), rat(1, 9)] {
            assert!(u.eval(&root).is_zero(), "U({root}) != 0");
        }
        let v = v_polynomial(&inv.a2, &inv.a3, &inv.a4);
        assert!(v.eval(&rat(1, 2)).is_zero());
        assert!(v.eval(&rat(-1, 2)).is_zero());
        // V has even-degree terms only
        for i in [1usize, 3, 5] {
            assert!(v.coeff(i).is_zero());
        }

        let ones = u_polynomial(&rat_int(3), &rat_int(1), &rat_int(3));
        assert_eq!(ones, PolyQ::from_i64(&[-1, 3, -3, 1])); // (t-1)^3
    }

    #[test]
    fn v_is_u_composed_with_square() {
        let (a2, a3, a4) = (rat(49, 36), rat(1, 6), rat(7, 18));
        let u = u_polynomial(&a2, &a3, &a4);
        let v = v_polynomial(&a2, &a3, &a4);
        // substitute t^2 into U coefficientwise
        let t_squared = PolyQ::from_i64(&[0, 0, 1]);
        let mut composed = PolyQ::zero();
        let mut power = PolyQ::one();
        for c in u.coeffs() {
            composed = composed + PolyQ::constant(c.clone()) * &power;
            power = power * &t_squared;
        }
        assert_eq!(v, composed);
    }

    #[test]
    fn cardano_roots_of_unity() {
        let roots = cardano_roots(&PolyQ::from_i64(&[-1, 0, 0, 1]));
        assert!((roots[0].re - 1.0).abs() < 1e-12 && roots[0].im == 0.0);
        assert!((roots[1].re + 0.5).abs() < 1e-12);
        assert!((roots[1].im.abs() - 0.75f64.sqrt()).abs() < 1e-12);
        assert_eq!(roots[1].im, -roots[2].im);
    }

    #[test]
    fn cardano_repeated_roots() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let roots = cardano_roots(&PolyQ::from_i64(&[2, -3, 0, 1]));
        let re: Vec<f64> = roots.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![-2.0, 1.0, 1.0]);
        // (t-1)^3
        let triple = cardano_roots(&PolyQ::from_i64(&[-1, 3, -3, 1]));
        for z in triple {
            assert_eq!(z, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn cardano_on_u_for_123() {
        let inv =
            SymmetricInvariants::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap();
        let roots = cardano_roots(&u_polynomial(&inv.a2, &inv.a3, &inv.a4));
        let expected = [1.0 / 9.0, 0.25, 1.0];
        for (z, want) in roots.iter().zip(expected) {
            assert_eq!(z.im, 0.0);
            assert!((z.re - want).abs() < 1e-12, "{} vs {want}", z.re);
        }
    }

    #[test]
    fn cardano_on_bisector_cubic() {
        // monic form of 4t^3 - 12t^2 - 3t + 6
        let f = PolyQ::from_i64(&[6, -3, -12, 4]).monic();
        let roots = cardano_roots(&f);
        let in_unit: Vec<f64> = roots
            .iter()
            .filter(|z| z.im == 0.0 && z.re > 0.0 && z.re < 1.0)
            .map(|z| z.re)
            .collect();
        assert_eq!(in_unit.len(), 1);
        assert!((in_unit[0] - 0.6557).abs() < 5e-4);
        // every real root satisfies the cubic to high relative accuracy
        for z in roots.iter() {
            let val = f.eval_f64(z.re);
            assert!(val.abs() < 1e-10 * z.re.abs().max(1.0).powi(3));
        }
    }

    #[test]
    fn cardano_negative_leading_coefficient() {
        // -(t^3 - 6t^2 + 11t - 6) = -(t-1)(t-2)(t-3)
        let f = PolyQ::from_i64(&[6, -11, 6, -1]);
        let roots = cardano_roots(&f);
        for (z, want) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert_eq!(z.im, 0.0);
            assert!((z.re - want).abs() < 1e-12, "{} vs {want}", z.re);
        }
    }

    #[test]
    fn recover_bisectors_examples() {
        let l = recover_bisectors(&rat(49, 36), &rat(1, 6), &rat(7, 18)).unwrap();
        for (got, want) in l.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        let ones = recover_bisectors(&rat_int(3), &rat_int(1), &rat_int(3)).unwrap();
        for x in ones {
            assert!((x - 1.0).abs() < 1e-12);
        }
        // (a2, a3, a4) = (1, 1, 1): U = t^3 - t^2 + t - 1 = (t-1)(t^2+1),
        // complex roots mean the invariants are not realizable
        assert_eq!(
            recover_bisectors(&rat_int(1), &rat_int(1), &rat_int(1)),
            Err(WolffError::NonPositiveRoots)
        );
    }

    #[test]
    fn recovery_round_trip_with_fractional_triple() {
        let l = [rat_int(1), rat(1, 3), rat(1, 3)];
        let inv = SymmetricInvariants::from_bisectors(&l).unwrap();
        let got = recover_bisectors(&inv.a2, &inv.a3, &inv.a4).unwrap();
        let want = [1.0 / 3.0, 1.0 / 3.0, 1.0];
        for i in 0..3 {
            assert!((got[i] - want[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn incircle_root_residuals() {
        let cfg = SolverConfig::default();
        assert!(check_incircle_root([1.0, 1.0, 1.0], &cfg).unwrap() <= 1e-10);
        let t = crate::triangle::Triangle::new(3.0, 4.0, 5.0).unwrap();
        assert!(check_incircle_root(t.bisectors(), &cfg).unwrap() <= 1e-8);
        assert!(check_incircle_root([1.0, 1.0 / 3.0, 1.0 / 3.0], &cfg).unwrap() <= 1e-8);
        assert_eq!(
            check_incircle_root([1.0, -1.0, 1.0], &cfg),
            Err(SolveError::NonPositiveInput)
        );
    }
}
