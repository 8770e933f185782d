//! Forward triangle geometry: classical metrics and the area identities in
//! terms of sides, medians, altitudes and angle bisectors.
//!
//! Everything here is a pure function of the side lengths. Double precision
//! is used throughout; `area_heron_digits` provides a high-precision cross
//! check built on exact rational arithmetic for use as a test oracle.

use crate::exact::{rational_from_f64, sqrt_with_digits, Rational};
use num_traits::Signed;
use serde::Serialize;

/// Relative slack applied to the strict triangle inequality: a candidate is
/// rejected unless each pairwise sum exceeds the third side by more than
/// this fraction of the perimeter.
const DEGENERACY_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriangleError {
    #[error("InvalidTriangle: sides must be positive, finite, and satisfy the strict triangle inequality")]
    InvalidTriangle,
    #[error("InvalidMedians: the median triple does not form a triangle")]
    InvalidMedians,
    #[error("InvalidAltitudes: the reciprocal altitudes do not form a triangle")]
    InvalidAltitudes,
    #[error("NonPositiveInput: lengths must be positive")]
    NonPositiveInput,
}

/// A triangle by its side lengths, labeled so side `a = BC` lies opposite
/// vertex `A`, and so on cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Triangle {
    a: f64,
    b: f64,
    c: f64,
}

/// Every derived metric in one bundle. Angles are radians; triples are
/// indexed by opposite vertex, `[_a, _b, _c]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Metrics {
    pub semiperimeter: f64,
    pub area: f64,
    pub inradius: f64,
    pub angles: [f64; 3],
    pub medians: [f64; 3],
    pub altitudes: [f64; 3],
    pub bisectors: [f64; 3],
}

fn triple_is_triangle(x: f64, y: f64, z: f64) -> bool {
    let all_positive = x > 0.0 && y > 0.0 && z > 0.0;
    let finite = x.is_finite() && y.is_finite() && z.is_finite();
    if !all_positive || !finite {
        return false;
    }
    let scale = x + y + z;
    x + y - z > DEGENERACY_MARGIN * scale
        && y + z - x > DEGENERACY_MARGIN * scale
        && z + x - y > DEGENERACY_MARGIN * scale
}

/// Heron's formula in Kahan's numerically stable ordering. The inputs must
/// already be sorted x >= y >= z and form a valid triangle.
fn kahan_area(x: f64, y: f64, z: f64) -> f64 {
    debug_assert!(x >= y && y >= z);
    // parenthesization is load-bearing
    0.25 * ((x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))).sqrt()
}

fn sorted_desc(x: f64, y: f64, z: f64) -> (f64, f64, f64) {
    let mut v = [x, y, z];
    v.sort_by(|p, q| q.partial_cmp(p).expect("finite lengths"));
    (v[0], v[1], v[2])
}

impl Triangle {
    /// Validates positivity and the strict triangle inequality (with a
    /// relative slack of 1e-12 against parsing noise).
    pub fn new(a: f64, b: f64, c: f64) -> Result<Triangle, TriangleError> {
        if triple_is_triangle(a, b, c) {
            Ok(Triangle { a, b, c })
        } else {
            Err(TriangleError::InvalidTriangle)
        }
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn semiperimeter(&self) -> f64 {
        0.5 * (self.a + self.b + self.c)
    }

    /// Area by Heron's formula, evaluated in the Kahan ordering.
    pub fn area(&self) -> f64 {
        let (x, y, z) = sorted_desc(self.a, self.b, self.c);
        kahan_area(x, y, z)
    }

    /// r = S / p.
    pub fn inradius(&self) -> f64 {
        self.area() / self.semiperimeter()
    }

    /// Interior angles (radians) at vertices A, B, C via the law of cosines.
    pub fn angles(&self) -> [f64; 3] {
        let (a, b, c) = (self.a, self.b, self.c);
        let cos_a = ((b * b + c * c - a * a) / (2.0 * b * c)).clamp(-1.0, 1.0);
        let cos_b = ((c * c + a * a - b * b) / (2.0 * c * a)).clamp(-1.0, 1.0);
        let alpha = cos_a.acos();
        let beta = cos_b.acos();
        [alpha, beta, std::f64::consts::PI - alpha - beta]
    }

    /// Medians to sides a, b, c: m_a = sqrt(2b^2 + 2c^2 - a^2) / 2.
    pub fn medians(&self) -> [f64; 3] {
        let (a2, b2, c2) = (self.a * self.a, self.b * self.b, self.c * self.c);
        [
            0.5 * (2.0 * b2 + 2.0 * c2 - a2).sqrt(),
            0.5 * (2.0 * c2 + 2.0 * a2 - b2).sqrt(),
            0.5 * (2.0 * a2 + 2.0 * b2 - c2).sqrt(),
        ]
    }

    /// Altitudes h_i = 2S / side_i.
    pub fn altitudes(&self) -> [f64; 3] {
        let s2 = 2.0 * self.area();
        [s2 / self.a, s2 / self.b, s2 / self.c]
    }

    /// Internal angle-bisector lengths, from the angle form
    /// l_a = 2p sin(B/2) sin(C/2) / (cos(A/2) cos((B-C)/2)).
    pub fn bisectors(&self) -> [f64; 3] {
        let [alpha, beta, gamma] = self.angles();
        bisectors_from_angles(alpha, beta, gamma, self.semiperimeter())
    }

    /// Independent bisector route: l_a = 2 sqrt(b c p (p-a)) / (b+c).
    pub fn bisectors_side_form(&self) -> [f64; 3] {
        let p = self.semiperimeter();
        let l = |opp: f64, u: f64, v: f64| 2.0 / (u + v) * (u * v * p * (p - opp)).sqrt();
        [
            l(self.a, self.b, self.c),
            l(self.b, self.c, self.a),
            l(self.c, self.a, self.b),
        ]
    }

    pub fn metrics(&self) -> Metrics {
        Metrics {
            semiperimeter: self.semiperimeter(),
            area: self.area(),
            inradius: self.inradius(),
            angles: self.angles(),
            medians: self.medians(),
            altitudes: self.altitudes(),
            bisectors: self.bisectors(),
        }
    }

    /// Residuals of the two von Renthe-Fink identities relating the
    /// reciprocal-bisector invariants to r, S and p:
    ///
    ///   4 a2 r^2 S^2 - 8 a3 r^3 S^2 = r^4 + S^2
    ///   4 a2 r^2 p^2 - 8 a3 r^3 p^2 = r^2 + p^2
    ///
    /// Each residual is |lhs - rhs| / |rhs|. These are checked, not assumed:
    /// the identities come from an 1843 source.
    pub fn vrf_residuals(&self) -> [f64; 2] {
        let [la, lb, lc] = self.bisectors();
        let a2 = 1.0 / (la * la) + 1.0 / (lb * lb) + 1.0 / (lc * lc);
        let a3 = 1.0 / (la * lb * lc);
        let r = self.inradius();
        let s = self.area();
        let p = self.semiperimeter();
        let lhs1 = 4.0 * a2 * r * r * s * s - 8.0 * a3 * r * r * r * s * s;
        let rhs1 = r.powi(4) + s * s;
        let lhs2 = 4.0 * a2 * r * r * p * p - 8.0 * a3 * r * r * r * p * p;
        let rhs2 = r * r + p * p;
        [(lhs1 - rhs1).abs() / rhs1.abs(), (lhs2 - rhs2).abs() / rhs2.abs()]
    }
}

/// Bisector lengths from the angles and the semiperimeter. This is the form
/// the inverse solver iterates on (with p = 1).
pub fn bisectors_from_angles(alpha: f64, beta: f64, gamma: f64, semiperimeter: f64) -> [f64; 3] {
    let l = |a: f64, b: f64, c: f64| {
        2.0 * semiperimeter * (0.5 * b).sin() * (0.5 * c).sin()
            / ((0.5 * a).cos() * (0.5 * (b - c)).cos())
    };
    [
        l(alpha, beta, gamma),
        l(beta, gamma, alpha),
        l(gamma, alpha, beta),
    ]
}

/// Area from the medians: S = (1/3) sqrt((m_a+m_b+m_c)(m_a+m_b-m_c)(...)).
/// Evaluated as 4/3 of the Kahan-ordered Heron area of the median triple.
pub fn area_from_medians(ma: f64, mb: f64, mc: f64) -> Result<f64, TriangleError> {
    if !triple_is_triangle(ma, mb, mc) {
        return Err(TriangleError::InvalidMedians);
    }
    let (x, y, z) = sorted_desc(ma, mb, mc);
    Ok(4.0 / 3.0 * kahan_area(x, y, z))
}

/// Area from the altitudes, via the reciprocal Heron formula
/// 1/S = sqrt((1/h_a + 1/h_b + 1/h_c)(1/h_a + 1/h_b - 1/h_c)(...)).
pub fn area_from_altitudes(ha: f64, hb: f64, hc: f64) -> Result<f64, TriangleError> {
    if !(ha > 0.0 && hb > 0.0 && hc > 0.0) {
        return Err(TriangleError::InvalidAltitudes);
    }
    let (u, v, w) = (1.0 / ha, 1.0 / hb, 1.0 / hc);
    if !triple_is_triangle(u, v, w) {
        return Err(TriangleError::InvalidAltitudes);
    }
    let (x, y, z) = sorted_desc(u, v, w);
    Ok(1.0 / (4.0 * kahan_area(x, y, z)))
}

/// Elementary symmetric invariants of the reciprocal squared bisectors:
///
///   a2 = sum 1/l_i^2,  a3 = prod 1/l_i,  a4 = sum_{i<j} 1/(l_i^2 l_j^2)
///
/// Exact when the bisector lengths are rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricInvariants {
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
}

impl SymmetricInvariants {
    pub fn from_bisectors(l: &[Rational; 3]) -> Result<Self, TriangleError> {
        if l.iter().any(|x| !x.is_positive()) {
            return Err(TriangleError::NonPositiveInput);
        }
        let inv_sq: Vec<Rational> = l.iter().map(|x| (x * x).recip()).collect();
        let a2 = &(&inv_sq[0] + &inv_sq[1]) + &inv_sq[2];
        let a3 = (&l[0] * &l[1] * &l[2]).recip();
        let a4 = &inv_sq[0] * &inv_sq[1] + &inv_sq[1] * &inv_sq[2] + &inv_sq[2] * &inv_sq[0];
        Ok(SymmetricInvariants { a2, a3, a4 })
    }
}

/// The same invariants in double precision, for the floating pipeline.
pub fn invariants_f64(l: [f64; 3]) -> [f64; 3] {
    let [la, lb, lc] = l;
    let inv = [1.0 / (la * la), 1.0 / (lb * lb), 1.0 / (lc * lc)];
    [
        inv[0] + inv[1] + inv[2],
        1.0 / (la * lb * lc),
        inv[0] * inv[1] + inv[1] * inv[2] + inv[2] * inv[0],
    ]
}

/// Heron's formula evaluated in exact rational arithmetic with the square
/// root taken to `digits` decimal digits. The f64 sides are converted
/// exactly, so this is an independent high-precision oracle for `area`.
pub fn area_heron_digits(a: f64, b: f64, c: f64, digits: u32) -> Result<Rational, TriangleError> {
    if !triple_is_triangle(a, b, c) {
        return Err(TriangleError::InvalidTriangle);
    }
    let (a, b, c) = (
        rational_from_f64(a).ok_or(TriangleError::InvalidTriangle)?,
        rational_from_f64(b).ok_or(TriangleError::InvalidTriangle)?,
        rational_from_f64(c).ok_or(TriangleError::InvalidTriangle)?,
    );
    let two = crate::exact::rat_int(2);
    let p = (&a + &b + &c) / two;
    let radicand = &p * (&p - &a) * (&p - &b) * (&p - &c);
    if radicand.is_negative() {
        return Err(TriangleError::InvalidTriangle);
    }
    Ok(sqrt_with_digits(&radicand, digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int, rational_to_f64};

    fn t345() -> Triangle {
        Triangle::new(3.0, 4.0, 5.0).unwrap()
    }

    #[test]
    fn right_triangle_metrics() {
        let t = t345();
        assert_eq!(t.area(), 6.0);
        assert_eq!(t.inradius(), 1.0);
        assert_eq!(t.semiperimeter(), 6.0);
        let [_, _, gamma] = t.angles();
        assert!((gamma - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let [ha, hb, hc] = t.altitudes();
        assert_eq!((ha, hb), (4.0, 3.0));
        assert!((hc - 12.0 / 5.0).abs() < 1e-15);
    }

    #[test]
    fn equilateral_metrics() {
        let t = Triangle::new(2.0, 2.0, 2.0).unwrap();
        let s3 = 3.0f64.sqrt();
        assert!((t.area() - s3).abs() < 1e-15);
        for x in t.medians() {
            assert!((x - s3).abs() < 1e-15);
        }
        for x in t.bisectors() {
            assert!((x - s3).abs() < 1e-15);
        }
        for x in t.angles() {
            assert!((x - std::f64::consts::FRAC_PI_3).abs() < 1e-15);
        }
    }

    #[test]
    fn median_values_345() {
        let [ma, _, mc] = t345().medians();
        assert!((mc - 2.5).abs() < 1e-15); // half the hypotenuse
        assert!((ma - 0.5 * 73.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bisector_values_345() {
        let [la, _, lc] = t345().bisectors_side_form();
        assert!((lc - 12.0 * 2.0f64.sqrt() / 7.0).abs() < 1e-14);
        assert!((la - 2.0 / 9.0 * 360.0f64.sqrt()).abs() < 1e-14);
        // the two routes agree
        let angle_form = t345().bisectors();
        let side_form = t345().bisectors_side_form();
        for i in 0..3 {
            assert!((angle_form[i] - side_form[i]).abs() / side_form[i] < 1e-14);
        }
    }

    #[test]
    fn area_formulas_cross_check() {
        for (a, b, c) in [(3.0, 4.0, 5.0), (5.0, 6.0, 7.0), (7.0, 8.0, 9.0)] {
            let t = Triangle::new(a, b, c).unwrap();
            let s = t.area();
            let [ma, mb, mc] = t.medians();
            let [ha, hb, hc] = t.altitudes();
            assert!((area_from_medians(ma, mb, mc).unwrap() - s).abs() / s < 1e-13);
            assert!((area_from_altitudes(ha, hb, hc).unwrap() - s).abs() / s < 1e-13);
        }
        let s3 = 3.0f64.sqrt();
        let eq = area_from_medians(s3, s3, s3).unwrap();
        assert!((eq - s3).abs() < 1e-15);
    }

    #[test]
    fn law_of_sines_consistency() {
        let t = Triangle::new(4.0, 5.0, 6.0).unwrap();
        let [alpha, beta, gamma] = t.angles();
        assert!((alpha + beta + gamma - std::f64::consts::PI).abs() < 1e-12);
        let [a, b, c] = t.sides();
        let k = a / alpha.sin();
        assert!((b / beta.sin() - k).abs() / k < 1e-13);
        assert!((c / gamma.sin() - k).abs() / k < 1e-13);
    }

    #[test]
    fn degenerate_rejection() {
        assert_eq!(Triangle::new(1.0, 1.0, 2.0), Err(TriangleError::InvalidTriangle));
        assert_eq!(Triangle::new(1.0, 2.0, 3.0001), Err(TriangleError::InvalidTriangle));
        assert_eq!(Triangle::new(-1.0, 2.0, 2.0), Err(TriangleError::InvalidTriangle));
        assert_eq!(Triangle::new(0.0, 1.0, 1.0), Err(TriangleError::InvalidTriangle));
        assert_eq!(
            Triangle::new(f64::NAN, 1.0, 1.0),
            Err(TriangleError::InvalidTriangle)
        );
        assert!(area_from_medians(1.0, 1.0, 2.0).is_err());
        assert!(area_from_altitudes(1.0, 1.0, -2.0).is_err());
    }

    #[test]
    fn near_degenerate_heron_matches_high_precision_oracle() {
        // 50-digit oracle guards against cancellation in (1, 1, 1.999)
        let (a, b, c) = (1.0, 1.0, 1.999);
        let exact = area_heron_digits(a, b, c, 50).unwrap();
        let fast = Triangle::new(a, b, c).unwrap().area();
        let rel = (fast - rational_to_f64(&exact)).abs() / rational_to_f64(&exact);
        assert!(rel < 1e-13, "relative error {rel}");
    }

    #[test]
    fn symmetric_invariants_examples() {
        let inv = SymmetricInvariants::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)])
            .unwrap();
        assert_eq!(inv.a2, rat(49, 36));
        assert_eq!(inv.a3, rat(1, 6));
        assert_eq!(inv.a4, rat(7, 18));

        let ones = SymmetricInvariants::from_bisectors(&[rat_int(1), rat_int(1), rat_int(1)])
            .unwrap();
        assert_eq!((ones.a2, ones.a3, ones.a4), (rat_int(3), rat_int(1), rat_int(3)));

        assert_eq!(
            SymmetricInvariants::from_bisectors(&[rat_int(0), rat_int(1), rat_int(1)]),
            Err(TriangleError::NonPositiveInput)
        );
    }

    #[test]
    fn vrf_identities_hold() {
        for (a, b, c) in [(2.0, 2.0, 2.0), (3.0, 4.0, 5.0), (4.0, 5.0, 6.0)] {
            let [r1, r2] = Triangle::new(a, b, c).unwrap().vrf_residuals();
            assert!(r1 < 1e-10, "first identity residual {r1} for ({a},{b},{c})");
            assert!(r2 < 1e-10, "second identity residual {r2} for ({a},{b},{c})");
        }
    }

    #[test]
    fn scaling_covariance_spot() {
        let t = Triangle::new(4.0, 5.0, 6.0).unwrap();
        let k = 10.0;
        let tk = Triangle::new(40.0, 50.0, 60.0).unwrap();
        assert!((tk.area() - k * k * t.area()).abs() / tk.area() < 1e-14);
        for i in 0..3 {
            assert!((tk.bisectors()[i] - k * t.bisectors()[i]).abs() < 1e-12);
            assert!((tk.angles()[i] - t.angles()[i]).abs() < 1e-13);
        }
    }
}
