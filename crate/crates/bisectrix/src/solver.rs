//! Inverse problem: reconstruct the triangle with three prescribed internal
//! angle-bisector lengths, and the isosceles specialization that reduces to
//! a single cubic.
//!
//! Bisector lengths are homogeneous of degree 1 in scale, so the ratios
//! l_b/l_a and l_c/l_a depend only on the angles. The solver runs a damped
//! Newton iteration in the open angle simplex {alpha > 0, beta > 0,
//! alpha + beta < pi} on the two ratio equations at unit semiperimeter, then
//! recovers the scale from l_a. A fixed multistart grid covers the cases
//! where the equilateral start stalls; starts are tried in deterministic
//! order and the first success wins.

use crate::exact::{rat_int, PolyQ, Rational};
use crate::triangle::{bisectors_from_angles, Triangle};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_3, PI};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolveError {
    #[error("NonPositiveInput: bisector lengths must be positive and finite")]
    NonPositiveInput,
    #[error("NoConvergence: no start converged (best residual {best_residual:.3e})")]
    NoConvergence { best_residual: f64 },
    #[error("NonPositiveRatio: the bisector ratio must be positive")]
    NonPositiveRatio,
    #[error("NoRootInRange: no admissible root in (0, sqrt(2)/2)")]
    NoRootInRange,
}

/// Newton solver knobs. The defaults satisfy the round-trip properties; they
/// rarely need changing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Maximum relative bisector mismatch accepted as success.
    pub tolerance: f64,
    /// Newton iteration cap per start.
    pub max_iterations: usize,
    /// How many starts from the deterministic grid to try.
    pub multistart_count: usize,
    /// Initial Newton step factor; halved whenever the residual increases.
    pub damping: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tolerance: 1e-12,
            max_iterations: 200,
            multistart_count: 8,
            damping: 1.0,
        }
    }
}

/// A successful reconstruction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveResult {
    pub triangle: Triangle,
    /// Max relative mismatch between the requested bisectors and the forward
    /// bisectors of `triangle`.
    pub residual: f64,
    /// Newton iterations spent in the successful start.
    pub iterations: usize,
    /// Index into the deterministic start grid.
    pub start_used: usize,
}

/// Distance kept from the simplex boundary.
const SIMPLEX_MARGIN: f64 = 1e-9;

/// Deterministic multistart grid: equilateral first, then interior points
/// biased toward the isosceles axes and the degenerate corners.
const STARTS: [(f64, f64); 8] = [
    (FRAC_PI_3, FRAC_PI_3),
    (0.9, 0.9),
    (0.35, 0.35),
    (2.45, 0.35),
    (0.35, 2.45),
    (1.9, 0.6),
    (0.6, 1.9),
    (2.9, 0.12),
];

fn start_point(k: usize) -> (f64, f64) {
    if let Some(&s) = STARTS.get(k) {
        return s;
    }
    // low-discrepancy extension for multistart counts beyond the fixed grid
    let n = (k - STARTS.len() + 1) as f64;
    let u = (n * 0.754_877_666_246_692_7).fract();
    let v = (n * 0.569_840_290_998_053_2).fract();
    let alpha = 0.05 + u * (PI - 0.15);
    let beta = 0.05 + v * (PI - alpha - 0.1);
    (alpha, beta)
}

fn project(mut alpha: f64, mut beta: f64) -> (f64, f64) {
    alpha = alpha.max(SIMPLEX_MARGIN);
    beta = beta.max(SIMPLEX_MARGIN);
    let sum = alpha + beta;
    if sum > PI - SIMPLEX_MARGIN {
        let k = (PI - SIMPLEX_MARGIN) / sum;
        alpha = (alpha * k).max(SIMPLEX_MARGIN);
        beta = (beta * k).max(SIMPLEX_MARGIN);
    }
    (alpha, beta)
}

/// Relative ratio mismatch at unit semiperimeter:
/// g = (l_b/l_a / r1 - 1, l_c/l_a / r2 - 1).
fn ratio_residual(alpha: f64, beta: f64, r1: f64, r2: f64) -> [f64; 2] {
    let [la, lb, lc] = bisectors_from_angles(alpha, beta, PI - alpha - beta, 1.0);
    [lb / la / r1 - 1.0, lc / la / r2 - 1.0]
}

fn norm_inf(g: [f64; 2]) -> f64 {
    g[0].abs().max(g[1].abs())
}

/// One start of the damped Newton iteration; returns the angle pair and the
/// number of iterations on convergence of the ratio equations.
fn newton_from(
    start: (f64, f64),
    r1: f64,
    r2: f64,
    config: &SolverConfig,
) -> Option<((f64, f64), usize)> {
    let (mut alpha, mut beta) = project(start.0, start.1);
    let inner_tol = 0.25 * config.tolerance;
    for iter in 0..config.max_iterations {
        let g = ratio_residual(alpha, beta, r1, r2);
        let gn = norm_inf(g);
        if !gn.is_finite() {
            return None;
        }
        if gn <= inner_tol {
            return Some(((alpha, beta), iter));
        }
        // central finite-difference Jacobian, step shrunk near the boundary
        let interior = alpha.min(beta).min(PI - alpha - beta);
        let h = (1e-7 * alpha.abs().max(1.0)).min(0.25 * interior);
        let hb = (1e-7 * beta.abs().max(1.0)).min(0.25 * interior);
        let ga_p = ratio_residual(alpha + h, beta, r1, r2);
        let ga_m = ratio_residual(alpha - h, beta, r1, r2);
        let gb_p = ratio_residual(alpha, beta + hb, r1, r2);
        let gb_m = ratio_residual(alpha, beta - hb, r1, r2);
        let j = [
            [(ga_p[0] - ga_m[0]) / (2.0 * h), (gb_p[0] - gb_m[0]) / (2.0 * hb)],
            [(ga_p[1] - ga_m[1]) / (2.0 * h), (gb_p[1] - gb_m[1]) / (2.0 * hb)],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if !det.is_finite() || det.abs() < 1e-300 {
            return None;
        }
        let da = (-g[0] * j[1][1] + g[1] * j[0][1]) / det;
        let db = (-g[1] * j[0][0] + g[0] * j[1][0]) / det;
        // damped line search: halve until the residual decreases
        let mut step = config.damping;
        let mut accepted = false;
        for _ in 0..40 {
            let (na, nb) = project(alpha + step * da, beta + step * db);
            let gn_new = norm_inf(ratio_residual(na, nb, r1, r2));
            if gn_new.is_finite() && gn_new < gn {
                alpha = na;
                beta = nb;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            return None;
        }
    }
    None
}

fn triangle_from_angles(alpha: f64, beta: f64, target_la: f64) -> Option<(Triangle, f64)> {
    let gamma = PI - alpha - beta;
    let [la_unit, _, _] = bisectors_from_angles(alpha, beta, gamma, 1.0);
    let p = target_la / la_unit;
    let sins = [alpha.sin(), beta.sin(), gamma.sin()];
    let total: f64 = sins.iter().sum();
    let sides = [
        2.0 * p * sins[0] / total,
        2.0 * p * sins[1] / total,
        2.0 * p * sins[2] / total,
    ];
    Triangle::new(sides[0], sides[1], sides[2])
        .ok()
        .map(|t| (t, p))
}

/// Reconstructs the triangle whose internal bisectors have lengths
/// `[l_a, l_b, l_c]`. Success means the forward bisectors of the returned
/// triangle reproduce the inputs within `config.tolerance` (max relative
/// mismatch). Every positive triple is realizable, so `NoConvergence`
/// indicates a solver deficiency and carries the best residual reached.
pub fn solve_from_bisectors(l: [f64; 3], config: &SolverConfig) -> Result<SolveResult, SolveError> {
    if l.iter().any(|&x| x <= 0.0 || !x.is_finite()) {
        return Err(SolveError::NonPositiveInput);
    }
    let r1 = l[1] / l[0];
    let r2 = l[2] / l[0];
    let mut best_residual = f64::INFINITY;
    for k in 0..config.multistart_count.max(1) {
        let Some(((alpha, beta), iterations)) = newton_from(start_point(k), r1, r2, config) else {
            continue;
        };
        let Some((triangle, _)) = triangle_from_angles(alpha, beta, l[0]) else {
            continue;
        };
        let forward = triangle.bisectors();
        let residual = (0..3)
            .map(|i| ((forward[i] - l[i]) / l[i]).abs())
            .fold(0.0f64, f64::max);
        if residual <= config.tolerance {
            return Ok(SolveResult {
                triangle,
                residual,
                iterations,
                start_used: k,
            });
        }
        best_residual = best_residual.min(residual);
    }
    Err(SolveError::NoConvergence { best_residual })
}

/// The cubic in x = sin(beta/2) satisfied by the base half-angle of an
/// isosceles triangle whose base-vertex bisectors are rho times the apex
/// bisector: rho (3x - 4x^3) = 2 (1 - 2x^2), cleared to the integer-
/// primitive polynomial 4 rho x^3 - 4 x^2 - 3 rho x + 2.
pub fn cubic_for_isosceles(rho: &Rational) -> Result<PolyQ, SolveError> {
    if !rho.is_positive() {
        return Err(SolveError::NonPositiveRatio);
    }
    let four_rho = rat_int(4) * rho;
    let three_rho = rat_int(3) * rho;
    let f = PolyQ::from_coeffs(vec![rat_int(2), -three_rho, rat_int(-4), four_rho]);
    Ok(integer_primitive(&f))
}

/// Clears denominators and divides out the integer content; the sign is
/// normalized so the leading coefficient is positive.
fn integer_primitive(f: &PolyQ) -> PolyQ {
    if f.is_zero() {
        return PolyQ::zero();
    }
    let lcm = f.denominator_lcm();
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = crate::exact::rational::gcd_all(&ints);
    if content.is_zero() {
        content = BigInt::from(1);
    }
    if ints.last().map(Signed::is_negative).unwrap_or(false) {
        content = -content;
    }
    PolyQ::from_coeffs(
        ints.into_iter()
            .map(|n| Rational::from_integer(n.div_floor(&content)))
            .collect(),
    )
}

/// Solution of the isosceles specialization with apex bisector length 1.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IsoscelesSolution {
    /// x = sin(beta/2), the root of the cubic in (0, sqrt(2)/2).
    pub sin_half_base: f64,
    /// Apex angle.
    pub alpha: f64,
    /// Base angle (appears twice).
    pub beta: f64,
    /// Area of the triangle when the apex bisector has length 1; equals
    /// tan(alpha/2).
    pub area_factor: f64,
}

/// Solves the isosceles case for a given bisector ratio rho = l_b / l_a by
/// exact-sign bisection of the cubic on (0, sqrt(2)/2), then converts the
/// root to angles. Bisection runs to 1e-14 absolute width.
pub fn isosceles_solve(rho: &Rational) -> Result<IsoscelesSolution, SolveError> {
    let cubic = cubic_for_isosceles(rho)?;
    // largest rational below sqrt(2)/2
    let upper = Rational::new(
        BigInt::from(70_710_678_118_654_752u64),
        BigInt::from(100_000_000_000_000_000u64),
    );
    let x = bisect_exact(&cubic, Rational::zero(), upper, 1e-14)?;
    let beta = 2.0 * x.asin();
    let alpha = PI - 2.0 * beta;
    Ok(IsoscelesSolution {
        sin_half_base: x,
        alpha,
        beta,
        area_factor: (0.5 * alpha).tan(),
    })
}

/// Bisection with exact rational sign evaluation; the bracket endpoints must
/// straddle a sign change.
fn bisect_exact(f: &PolyQ, mut lo: Rational, mut hi: Rational, tol: f64) -> Result<f64, SolveError> {
    let sign_lo = f.eval(&lo).signum();
    let sign_hi = f.eval(&hi).signum();
    if sign_lo.is_zero() {
        return Ok(crate::exact::rational_to_f64(&lo));
    }
    if sign_hi.is_zero() {
        return Ok(crate::exact::rational_to_f64(&hi));
    }
    if sign_lo == sign_hi {
        return Err(SolveError::NoRootInRange);
    }
    let two = rat_int(2);
    loop {
        let mid = (&lo + &hi) / &two;
        let width = crate::exact::rational_to_f64(&(&hi - &lo));
        if width <= tol {
            return Ok(crate::exact::rational_to_f64(&mid));
        }
        let s = f.eval(&mid).signum();
        if s.is_zero() {
            return Ok(crate::exact::rational_to_f64(&mid));
        }
        if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}
