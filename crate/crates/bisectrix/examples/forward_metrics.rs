//! Forward geometry: every classical metric of a triangle, the three area
//! formulas (sides, medians, altitudes), and the 1843 incircle identities.
//!
//! ```bash
//! cargo run --example forward_metrics
//! ```

use bisectrix::exact::to_decimal_string;
use bisectrix::triangle::{area_from_altitudes, area_from_medians, area_heron_digits, Triangle};

fn main() {
    let t = Triangle::new(3.0, 4.0, 5.0).expect("a valid triangle");
    let m = t.metrics();

    println!("triangle with sides (3, 4, 5)");
    println!("  semiperimeter  p = {}", m.semiperimeter);
    println!("  area           S = {}", m.area);
    println!("  inradius       r = {}", m.inradius);
    println!("  angles           = {:?} rad", m.angles);
    println!("  medians          = {:?}", m.medians);
    println!("  altitudes        = {:?}", m.altitudes);
    println!("  bisectors        = {:?}", m.bisectors);

    // the same area three ways
    let [ma, mb, mc] = m.medians;
    let [ha, hb, hc] = m.altitudes;
    println!("\narea from the sides     = {}", m.area);
    println!("area from the medians   = {}", area_from_medians(ma, mb, mc).unwrap());
    println!("area from the altitudes = {}", area_from_altitudes(ha, hb, hc).unwrap());

    // the bisectors computed by two independent formulas agree
    let side_form = t.bisectors_side_form();
    println!("\nbisectors via the side formula  = {side_form:?}");

    // the two von Renthe-Fink relations tying a2, a3 to r, S, p
    let [res1, res2] = t.vrf_residuals();
    println!("\nincircle identity residuals = ({res1:.3e}, {res2:.3e})");

    // near-degenerate triangles are where the Kahan ordering earns its keep
    let thin = Triangle::new(1.0, 1.0, 1.999).unwrap();
    let oracle = area_heron_digits(1.0, 1.0, 1.999, 50).unwrap();
    println!("\nthin triangle (1, 1, 1.999):");
    println!("  Kahan-ordered Heron   = {:.17e}", thin.area());
    println!("  50-digit exact oracle = {}", to_decimal_string(&oracle, 50));
}
