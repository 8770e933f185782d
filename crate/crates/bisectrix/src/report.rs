//! The reproducible verification suite: eleven named checks that re-derive
//! every concrete claim the crate is built around, each with pinned
//! tolerances, deterministic seeded corpora and machine-readable evidence.
//!
//! `run_report` is what the `reproduce-paper` CLI command executes; the
//! acceptance test target runs the same checks one by one.

use crate::exact::{rat, rat_int, rational_to_f64, PolyQ, Rational};
use crate::galois::{
    constructibility_verdict, eisenstein_check, irreducible_over_q, radical_solvability_report,
    symmetric_group_certificate, Constructibility, GroupVerdict, Irreducibility, RadicalVerdict,
};
use crate::solver::{cubic_for_isosceles, isosceles_solve, solve_from_bisectors, SolverConfig};
use crate::triangle::{
    area_from_altitudes, area_from_medians, area_heron_digits, SymmetricInvariants, Triangle,
};
use crate::wolff::{check_incircle_root, recover_bisectors, u_polynomial, wolff_polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use std::f64::consts::PI;
use std::time::Instant;

/// Serializes a `Rational` as its canonical "num/den" string.
pub fn serialize_rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

/// One verification check with its evidence.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub claim: String,
    /// Stable slug identifying the claim for machine consumers.
    pub anchor: String,
    pub status: CheckStatus,
    pub evidence: Value,
    pub runtime_ms: f64,
}

/// Options for the verification suite. Defaults pin every check's stated
/// tolerance; `tolerance_override`, when set, replaces the
/// per-check thresholds for exploratory runs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ReportOptions {
    pub tolerance_override: Option<f64>,
    pub prime_bound: u64,
    /// Size of the large random corpora; the incircle-root corpus is half
    /// of this and the recovery corpus a fifth.
    pub corpus: usize,
    pub seed: u64,
    /// Decimal digits for the high-precision Heron oracle.
    pub precision: u32,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            tolerance_override: None,
            prime_bound: crate::galois::DEFAULT_PRIME_BOUND,
            corpus: 1000,
            seed: 1,
            precision: 50,
        }
    }
}

impl ReportOptions {
    fn tol(&self, pinned: f64) -> f64 {
        self.tolerance_override.unwrap_or(pinned)
    }
}

/// The full verification report; `schema` is the format version.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub seed: u64,
    pub prime_bound: u64,
    pub corpus: usize,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Report {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Human-readable table, one line per check.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!(
                "{status:<13} {:<24} {:>9.2} ms  {}\n",
                c.name, c.runtime_ms, c.claim
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed { "all checks passed" } else { "NOT all checks passed" }
        ));
        out
    }
}

/// Runs the eleven checks in fixed order. Deterministic for a given seed:
/// every check derives its own generator from `seed`, so corpus sizes in
/// one check never shift another.
pub fn run_report(opts: &ReportOptions) -> Report {
    let checks = vec![
        check_eisenstein(opts),
        check_constructibility(opts),
        check_isosceles_chain(opts),
        check_incircle_identity(opts),
        check_s10_certificate(opts),
        check_radical_report(opts),
        check_bisector_recovery(opts),
        check_area_agreement(opts),
        check_round_trips(opts),
        check_vrf(opts),
        check_honesty(opts),
    ];
    let passed = checks.iter().all(|c| c.status == CheckStatus::Pass);
    Report {
        schema: 1,
        seed: opts.seed,
        prime_bound: opts.prime_bound,
        corpus: opts.corpus,
        checks,
        passed,
    }
}

fn rng_for(seed: u64, check_index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(check_index.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Well-conditioned random triangle: angles uniform in the simplex with a
/// 0.15 rad margin, scale log-uniform in [0.1, 10].
pub fn random_triangle<R: Rng>(rng: &mut R) -> Triangle {
    const MARGIN: f64 = 0.15;
    loop {
        let alpha = rng.random_range(MARGIN..PI - 2.0 * MARGIN);
        let beta = rng.random_range(MARGIN..PI - alpha - MARGIN);
        let gamma = PI - alpha - beta;
        if gamma < MARGIN {
            continue;
        }
        let scale = 10f64.powf(rng.random_range(-1.0..1.0));
        let sins = [alpha.sin(), beta.sin(), gamma.sin()];
        let total: f64 = sins.iter().sum();
        let perimeter = 2.0 * scale;
        if let Ok(t) = Triangle::new(
            perimeter * sins[0] / total,
            perimeter * sins[1] / total,
            perimeter * sins[2] / total,
        ) {
            return t;
        }
    }
}

/// Arbitrary positive bisector triple, uniform in [0.1, 10] per component.
pub fn random_bisector_triple<R: Rng>(rng: &mut R) -> [f64; 3] {
    [
        rng.random_range(0.1..10.0),
        rng.random_range(0.1..10.0),
        rng.random_range(0.1..10.0),
    ]
}

/// Positive rational triple with numerators and denominators up to 60.
pub fn random_rational_triple<R: Rng>(rng: &mut R) -> [Rational; 3] {
    std::array::from_fn(|_| {
        rat(rng.random_range(1..=60), rng.random_range(1..=60))
    })
}

fn finish(
    name: &str,
    claim: &str,
    anchor: &str,
    started: Instant,
    status: CheckStatus,
    evidence: Value,
) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        claim: claim.to_string(),
        anchor: anchor.to_string(),
        status,
        evidence,
        runtime_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

fn status_of(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

fn bisector_cubic() -> PolyQ {
    PolyQ::from_i64(&[6, -3, -12, 4])
}

fn check_eisenstein(_opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let witness = eisenstein_check(&bisector_cubic());
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let ok = witness == Some(3) && elapsed_ms < 1.0;
    finish(
        "eisenstein_cubic",
        "4t^3 - 12t^2 - 3t + 6 is irreducible over Q with Eisenstein witness p = 3, in under 1 ms",
        "eisenstein-cubic",
        started,
        status_of(ok),
        json!({ "witness": witness, "witness_runtime_ms": elapsed_ms }),
    )
}

fn check_constructibility(_opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let verdict = constructibility_verdict(&bisector_cubic());
    let iso = isosceles_solve(&rat(1, 3));
    let solver_ok = iso.is_ok();
    let conclusion = iso
        .map(|s| {
            json!({
                "bisectors": [1.0, 1.0 / 3.0, 1.0 / 3.0],
                "sin_half_base": s.sin_half_base,
                "area": s.area_factor,
                "statement": "sin of the half base angle is a root of the certified \
                              non-constructible cubic, so neither the triangle nor a square \
                              of equal area can be constructed by ruler and compass from the \
                              unit segment",
            })
        })
        .unwrap_or(Value::Null);
    let ok = verdict.verdict == Constructibility::NotConstructible && solver_ok;
    finish(
        "cubic_not_constructible",
        "the half-angle cubic admits no constructible root; the (1, 1/3, 1/3) triangle has no \
         ruler-and-compass square of equal area",
        "constructibility-obstruction",
        started,
        status_of(ok),
        json!({ "verdict": verdict, "isosceles_conclusion": conclusion }),
    )
}

fn check_isosceles_chain(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let cubic = cubic_for_isosceles(&rat(1, 3));
    let cubic_exact = cubic.as_ref().map(|f| f == &bisector_cubic()).unwrap_or(false);
    let mut relation_residual = f64::NAN;
    let mut area_error = f64::NAN;
    let mut root = f64::NAN;
    if let Ok(sol) = isosceles_solve(&rat(1, 3)) {
        root = sol.sin_half_base;
        relation_residual = ((1.5 * sol.beta).sin() - 6.0 * sol.beta.cos()).abs();
        if let Ok(solved) =
            solve_from_bisectors([1.0, 1.0 / 3.0, 1.0 / 3.0], &SolverConfig::default())
        {
            area_error = (solved.triangle.area() - sol.area_factor).abs();
        }
    }
    let ok = cubic_exact
        && relation_residual <= opts.tol(1e-12)
        && area_error <= opts.tol(1e-10);
    finish(
        "isosceles_chain",
        "for ratio 1/3 the half-base-angle cubic is exactly 4x^3 - 12x^2 - 3x + 6; its root \
         satisfies sin(3b/2) = 6 cos b and the solved triangle's area equals tan(a/2)",
        "isosceles-chain",
        started,
        status_of(ok),
        json!({
            "cubic_exact": cubic_exact,
            "root": root,
            "relation_residual": relation_residual,
            "area_error": area_error,
        }),
    )
}

fn check_incircle_identity(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let mut rng = rng_for(opts.seed, 4);
    let count = (opts.corpus / 2).max(1);
    let config = SolverConfig::default();
    let tol = opts.tol(1e-8);
    let mut max_residual = 0.0f64;
    let mut failures = 0usize;
    for _ in 0..count {
        let t = random_triangle(&mut rng);
        match check_incircle_root(t.bisectors(), &config) {
            Ok(residual) => {
                max_residual = max_residual.max(residual);
                if residual > tol {
                    failures += 1;
                }
            }
            Err(_) => failures += 1,
        }
    }
    let w = wolff_polynomial(&rat_int(3), &rat_int(1), &rat_int(3));
    let equilateral_exact = w.eval(&rat(3, 2)).is_zero();
    let elapsed = started.elapsed().as_secs_f64();
    let ok = failures == 0 && equilateral_exact && elapsed < 5.0;
    finish(
        "incircle_root_identity",
        "1/(2r) is a root of the degree-10 polynomial: normalized residual <= 1e-8 across the \
         random corpus, exact zero at the equilateral invariants",
        "incircle-degree-10-root",
        started,
        status_of(ok),
        json!({
            "corpus": count,
            "max_residual": max_residual,
            "failures": failures,
            "equilateral_exact_zero": equilateral_exact,
            "runtime_s": elapsed,
        }),
    )
}

fn check_s10_certificate(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let inv = SymmetricInvariants::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)])
        .expect("positive triple");
    let w = wolff_polynomial(&inv.a2, &inv.a3, &inv.a4);
    let cert = symmetric_group_certificate(&w, opts.prime_bound);
    let elapsed = started.elapsed().as_secs_f64();
    let status = match cert.verdict {
        GroupVerdict::SymmetricGroup if elapsed < 60.0 => CheckStatus::Pass,
        GroupVerdict::SymmetricGroup => CheckStatus::Fail,
        GroupVerdict::Inconclusive => CheckStatus::Inconclusive,
        GroupVerdict::ContainsAlternating => CheckStatus::Fail,
    };
    finish(
        "s10_certificate",
        "for bisectors (1, 2, 3) the degree-10 polynomial is irreducible over Q with Galois \
         group certified to be S_10 (prime-length cycle in the Jordan window, non-square \
         discriminant)",
        "s10-galois-certificate",
        started,
        status,
        json!({
            "verdict": cert.verdict,
            "irreducibility": cert.irreducibility,
            "long_prime_cycle": cert.long_prime_cycle,
            "discriminant_is_square": cert.discriminant_is_square,
            "primes_sampled": cert.primes_sampled.len(),
            "runtime_s": elapsed,
        }),
    )
}

fn check_radical_report(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let report =
        radical_solvability_report(&[rat_int(1), rat_int(2), rat_int(3)], opts.prime_bound);
    let status = match report.verdict {
        RadicalVerdict::NotRadical => CheckStatus::Pass,
        RadicalVerdict::Inconclusive => CheckStatus::Inconclusive,
    };
    finish(
        "radical_report",
        "for bisectors (1, 2, 3) the inradius, the area and the semiperimeter are not \
         expressible in radicals of rational numbers, with the full evidence chain",
        "radical-impossibility",
        started,
        status,
        serde_json::to_value(&report).expect("report serializes"),
    )
}

fn check_bisector_recovery(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let mut rng = rng_for(opts.seed, 7);
    let count = (opts.corpus / 5).max(1);
    let tol = opts.tol(1e-12);
    let mut max_error = 0.0f64;
    let mut failures = 0usize;
    for _ in 0..count {
        let l = random_rational_triple(&mut rng);
        let inv = SymmetricInvariants::from_bisectors(&l).expect("positive");
        let mut expected: [f64; 3] = [
            rational_to_f64(&l[0]),
            rational_to_f64(&l[1]),
            rational_to_f64(&l[2]),
        ];
        expected.sort_by(f64::total_cmp);
        match recover_bisectors(&inv.a2, &inv.a3, &inv.a4) {
            Ok(got) => {
                for i in 0..3 {
                    let err = (got[i] - expected[i]).abs() / expected[i];
                    max_error = max_error.max(err);
                    if err > tol {
                        failures += 1;
                    }
                }
            }
            Err(_) => failures += 1,
        }
    }
    // exact Vieta roots for (1, 2, 3)
    let inv = SymmetricInvariants::from_bisectors(&[rat_int(1), rat_int(2), rat_int(3)])
        .expect("positive");
    let u = u_polynomial(&inv.a2, &inv.a3, &inv.a4);
    let exact_roots = [rat_int(1), rat(1, 4), rat(1, 9)]
        .iter()
        .all(|r| u.eval(r).is_zero());
    let ok = failures == 0 && exact_roots;
    finish(
        "bisector_recovery",
        "the bisector lengths are recovered from their symmetric invariants through the cubic \
         U (roots 1/l_i^2) to 1e-12; U has the exact roots {1, 1/4, 1/9} for (1, 2, 3)",
        "invariant-recovery",
        started,
        status_of(ok),
        json!({
            "corpus": count,
            "max_relative_error": max_error,
            "failures": failures,
            "exact_u_roots_123": exact_roots,
        }),
    )
}

fn check_area_agreement(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let mut rng = rng_for(opts.seed, 8);
    let tol = opts.tol(1e-11);
    let mut max_rel = 0.0f64;
    let mut failures = 0usize;
    for _ in 0..opts.corpus {
        let t = random_triangle(&mut rng);
        let s = t.area();
        let [ma, mb, mc] = t.medians();
        let [ha, hb, hc] = t.altitudes();
        let from_medians = area_from_medians(ma, mb, mc);
        let from_altitudes = area_from_altitudes(ha, hb, hc);
        match (from_medians, from_altitudes) {
            (Ok(sm), Ok(sh)) => {
                let rel = ((sm - s).abs() / s).max((sh - s).abs() / s);
                max_rel = max_rel.max(rel);
                if rel > tol {
                    failures += 1;
                }
            }
            _ => failures += 1,
        }
    }
    let right = Triangle::new(3.0, 4.0, 5.0).expect("valid").area();
    let exact_345 = right == 6.0;
    // high-precision oracle cross-check on a thin triangle
    let oracle = area_heron_digits(1.0, 1.0, 1.999, opts.precision).expect("valid");
    let fast = Triangle::new(1.0, 1.0, 1.999).expect("valid").area();
    let oracle_rel = (fast - rational_to_f64(&oracle)).abs() / rational_to_f64(&oracle);
    let ok = failures == 0 && exact_345 && oracle_rel < 1e-13;
    finish(
        "area_formula_agreement",
        "the Heron, median and altitude area formulas agree to 1e-11 relative across the \
         corpus; (3, 4, 5) yields exactly 6; the Kahan evaluation matches a 50-digit exact \
         oracle on a thin triangle",
        "area-formulas",
        started,
        status_of(ok),
        json!({
            "corpus": opts.corpus,
            "max_relative_spread": max_rel,
            "failures": failures,
            "exact_345": exact_345,
            "thin_triangle_vs_oracle": oracle_rel,
        }),
    )
}

fn check_round_trips(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let mut rng = rng_for(opts.seed, 9);
    let tol = opts.tol(1e-10);
    // the round-trip property is stated at 1e-10; extreme bisector ratios
    // have a forward-evaluation floor above the solver's 1e-12 default
    let config = SolverConfig {
        tolerance: tol,
        ..SolverConfig::default()
    };
    let mut max_side_error = 0.0f64;
    let mut max_bisector_error = 0.0f64;
    let mut no_convergence = 0usize;
    let mut failures = 0usize;
    // trip A: triangle -> bisectors -> congruent triangle
    for _ in 0..opts.corpus {
        let t = random_triangle(&mut rng);
        match solve_from_bisectors(t.bisectors(), &config) {
            Ok(result) => {
                let mut want = t.sides();
                let mut got = result.triangle.sides();
                want.sort_by(f64::total_cmp);
                got.sort_by(f64::total_cmp);
                for i in 0..3 {
                    let err = (got[i] - want[i]).abs() / want[i];
                    max_side_error = max_side_error.max(err);
                    if err > tol {
                        failures += 1;
                    }
                }
            }
            Err(_) => no_convergence += 1,
        }
    }
    // trip B: arbitrary positive triple -> triangle -> the same bisectors
    for _ in 0..opts.corpus {
        let l = random_bisector_triple(&mut rng);
        match solve_from_bisectors(l, &config) {
            Ok(result) => {
                let forward = result.triangle.bisectors();
                for i in 0..3 {
                    let err = (forward[i] - l[i]).abs() / l[i];
                    max_bisector_error = max_bisector_error.max(err);
                    if err > tol {
                        failures += 1;
                    }
                }
            }
            Err(_) => no_convergence += 1,
        }
    }
    let ok = failures == 0 && no_convergence == 0;
    finish(
        "inverse_round_trips",
        "reconstruction round-trips: bisectors of a random triangle give back a congruent \
         triangle, and any positive triple is realized, both to 1e-10 with zero convergence \
         failures",
        "inverse-round-trips",
        started,
        status_of(ok),
        json!({
            "corpus_each_way": opts.corpus,
            "max_side_error": max_side_error,
            "max_bisector_error": max_bisector_error,
            "no_convergence": no_convergence,
            "failures": failures,
        }),
    )
}

fn check_vrf(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let mut rng = rng_for(opts.seed, 10);
    let tol = opts.tol(1e-10);
    let mut max_res = [0.0f64; 2];
    let mut discrepancy: Option<String> = None;
    for _ in 0..opts.corpus {
        let t = random_triangle(&mut rng);
        let res = t.vrf_residuals();
        for k in 0..2 {
            max_res[k] = max_res[k].max(res[k]);
            if res[k] > tol && discrepancy.is_none() {
                let [a, b, c] = t.sides();
                // an 1843 identity failing is reported verbatim, never patched
                discrepancy = Some(format!(
                    "historical-source discrepancy: relation {} residual {:.3e} at triangle \
                     ({a}, {b}, {c})",
                    k + 1,
                    res[k]
                ));
            }
        }
    }
    let ok = discrepancy.is_none();
    finish(
        "vrf_identity",
        "both 1843 incircle relations (4 a2 r^2 S^2 - 8 a3 r^3 S^2 = r^4 + S^2 and its \
         S = p r substitution) hold to 1e-10 across the corpus",
        "vrf-identities",
        started,
        status_of(ok),
        json!({
            "corpus": opts.corpus,
            "max_residual_relation_1": max_res[0],
            "max_residual_relation_2": max_res[1],
            "discrepancy": discrepancy,
        }),
    )
}

fn check_honesty(opts: &ReportOptions) -> CheckResult {
    let started = Instant::now();
    let quartic = PolyQ::from_i64(&[1, 0, 0, 0, 1]);
    let quartic_unknown = irreducible_over_q(&quartic, opts.prime_bound) == Irreducibility::Unknown;
    let cyclic = PolyQ::from_i64(&[-1, -3, 0, 1]);
    let cert = symmetric_group_certificate(&cyclic, opts.prime_bound);
    let cyclic_guard = cert.verdict != GroupVerdict::SymmetricGroup;
    let ok = quartic_unknown && cyclic_guard;
    finish(
        "honesty_guards",
        "the engine never overclaims: t^4 + 1 (irreducible over Q, reducible mod every prime) \
         stays Unknown; t^3 - 3t - 1 (cyclic, square discriminant) is never certified S_3",
        "honesty-guards",
        started,
        status_of(ok),
        json!({
            "t4_plus_1_unknown": quartic_unknown,
            "t3_minus_3t_minus_1_verdict": cert.verdict,
            "t3_discriminant_is_square": cert.discriminant_is_square,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip_timings(v: &mut Value) {
        if let Value::Object(map) = v {
            map.retain(|k, _| !k.contains("runtime"));
            for child in map.values_mut() {
                strip_timings(child);
            }
        }
    }

    #[test]
    fn small_report_is_deterministic() {
        let opts = ReportOptions {
            corpus: 20,
            seed: 7,
            ..ReportOptions::default()
        };
        let a = run_report(&opts);
        let b = run_report(&opts);
        // identical verdicts and evidence, timing aside
        for (x, y) in a.checks.iter().zip(b.checks.iter()) {
            assert_eq!(x.status, y.status, "{}", x.name);
            let (mut ex, mut ey) = (x.evidence.clone(), y.evidence.clone());
            strip_timings(&mut ex);
            strip_timings(&mut ey);
            assert_eq!(ex, ey, "{}", x.name);
        }
        assert_eq!(a.checks.len(), 11);
        assert!(a.passed, "report:\n{}", a.render_table());
    }

    #[test]
    fn starved_prime_bound_is_inconclusive_not_fail() {
        let opts = ReportOptions {
            corpus: 6,
            prime_bound: 2,
            ..ReportOptions::default()
        };
        let report = run_report(&opts);
        let s10 = report.checks.iter().find(|c| c.name == "s10_certificate").unwrap();
        assert_eq!(s10.status, CheckStatus::Inconclusive);
        assert!(!report.passed);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let opts = ReportOptions {
            corpus: 6,
            ..ReportOptions::default()
        };
        let report = run_report(&opts);
        let emitted = serde_json::to_string(&report.to_json()).unwrap();
        let reparsed: Value = serde_json::from_str(&emitted).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), emitted);
    }
}
