//! Command-line front end. All real work lives in the library; this binary
//! parses arguments, delegates, and prints either text or the JSON schema
//! {command, inputs, outputs, evidence}.
//!
//! Exit codes: 0 success (for reproduce-paper: every check passed),
//! 1 domain error or failed check, 2 usage error (clap's default).

use bisectrix::exact::{parse_rational, rational_to_f64, PolyQ, Rational};
use bisectrix::galois::{
    constructibility_verdict, radical_solvability_report, symmetric_group_certificate,
};
use bisectrix::report::{run_report, ReportOptions};
use bisectrix::solver::{solve_from_bisectors, SolverConfig};
use bisectrix::triangle::{area_from_altitudes, area_from_medians, Triangle};
use bisectrix::wolff::{check_incircle_root, recover_bisectors, WolffData};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bisectrix",
    version,
    about = "Triangles from angle-bisector lengths, with exact algebraic certificates"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forward geometry: all metrics of the triangle with sides A B C.
    Forward {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Decimal digits for the high-precision area cross-check.
        #[arg(long, default_value_t = 50)]
        precision: u32,
    },
    /// Reconstruct the triangle whose internal bisectors are LA LB LC.
    Solve {
        #[arg(allow_hyphen_values = true)]
        la: String,
        #[arg(allow_hyphen_values = true)]
        lb: String,
        #[arg(allow_hyphen_values = true)]
        lc: String,
        /// Maximum relative bisector mismatch accepted.
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Exact invariants a2 a3 a4, the degree-10 polynomial, U, V and the
    /// recovered bisectors for rational bisector lengths LA LB LC.
    Wolff {
        #[arg(allow_hyphen_values = true)]
        la: String,
        #[arg(allow_hyphen_values = true)]
        lb: String,
        #[arg(allow_hyphen_values = true)]
        lc: String,
    },
    /// Symmetric-group certificate for a polynomial given as
    /// "c0,c1,...,cn" (constant term first, rationals as num/den).
    Galois {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 500)]
        prime_bound: u64,
    },
    /// Ruler-and-compass verdict for a root of the polynomial.
    Constructible {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Radical-solvability report for rational bisectors LA LB LC.
    Radical {
        #[arg(allow_hyphen_values = true)]
        la: String,
        #[arg(allow_hyphen_values = true)]
        lb: String,
        #[arg(allow_hyphen_values = true)]
        lc: String,
        #[arg(long, default_value_t = 500)]
        prime_bound: u64,
    },
    /// Re-derive every verified claim and emit the report.
    ReproducePaper {
        /// Replace the pinned per-check tolerances (exploratory runs only).
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, default_value_t = 500)]
        prime_bound: u64,
        /// Size of the large random corpora.
        #[arg(long, default_value_t = 1000)]
        corpus: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Decimal digits for the high-precision oracle.
        #[arg(long, default_value_t = 50)]
        precision: u32,
    },
}

enum CliError {
    /// Malformed arguments: exit 2, like clap's own usage errors.
    Usage(String),
    /// Well-formed request that the domain rejected: exit 1.
    Domain(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

/// Parses a length that may be a decimal or an exact "num/den" fraction.
fn parse_length(s: &str) -> Result<f64, CliError> {
    if let Ok(r) = parse_rational(s) {
        return Ok(rational_to_f64(&r));
    }
    s.trim()
        .parse::<f64>()
        .map_err(|_| CliError::Usage(format!("UsageError: cannot parse {s:?} as a length")))
}

fn parse_exact(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("UsageError: {e}")))
}

fn parse_poly(s: &str) -> Result<PolyQ, CliError> {
    PolyQ::parse(s).map_err(|e| CliError::Usage(format!("UsageError: {e}")))
}

fn domain(err: impl std::fmt::Display) -> CliError {
    CliError::Domain(err.to_string())
}

fn emit(json_mode: bool, payload: Value, text: String) {
    if json_mode {
        println!("{}", serde_json::to_string(&payload).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn command_payload(command: &str, inputs: Value, outputs: Value, evidence: Value) -> Value {
    // serde_json::Value objects serialize with sorted keys, so parsing and
    // re-serializing this payload is byte-identical
    json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "evidence": evidence,
    })
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Forward { a, b, c, precision } => {
            let (a, b, c) = (parse_length(a)?, parse_length(b)?, parse_length(c)?);
            let triangle = Triangle::new(a, b, c).map_err(domain)?;
            let m = triangle.metrics();
            let [r1, r2] = triangle.vrf_residuals();
            let [ma, mb, mc] = m.medians;
            let [ha, hb, hc] = m.altitudes;
            let area_medians = area_from_medians(ma, mb, mc).map_err(domain)?;
            let area_altitudes = area_from_altitudes(ha, hb, hc).map_err(domain)?;
            let hi = bisectrix::triangle::area_heron_digits(a, b, c, *precision)
                .map_err(domain)?;
            let payload = command_payload(
                "forward",
                json!({ "sides": [a, b, c] }),
                serde_json::to_value(m).expect("metrics serialize"),
                json!({
                    "area_from_medians": area_medians,
                    "area_from_altitudes": area_altitudes,
                    "area_high_precision": bisectrix::exact::to_decimal_string(&hi, *precision),
                    "vrf_residuals": [r1, r2],
                }),
            );
            let text = format!(
                "triangle ({a}, {b}, {c})\n\
                 semiperimeter p = {}\narea S = {}\ninradius r = {}\n\
                 angles = {:?}\nmedians = {:?}\naltitudes = {:?}\nbisectors = {:?}\n\
                 area via medians = {area_medians}\narea via altitudes = {area_altitudes}\n\
                 vrf residuals = ({r1:.3e}, {r2:.3e})",
                m.semiperimeter, m.area, m.inradius, m.angles, m.medians, m.altitudes, m.bisectors,
            );
            emit(cli.json, payload, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { la, lb, lc, tolerance } => {
            let l = [parse_length(la)?, parse_length(lb)?, parse_length(lc)?];
            let config = SolverConfig {
                tolerance: *tolerance,
                ..SolverConfig::default()
            };
            let result = solve_from_bisectors(l, &config).map_err(domain)?;
            let sides = result.triangle.sides();
            let area = result.triangle.area();
            let payload = command_payload(
                "solve",
                json!({ "bisectors": l, "tolerance": tolerance }),
                json!({ "sides": sides, "area": area }),
                json!({
                    "residual": result.residual,
                    "iterations": result.iterations,
                    "start_used": result.start_used,
                    "forward_bisectors": result.triangle.bisectors(),
                }),
            );
            let text = format!(
                "sides = ({}, {}, {})\narea = {area}\nresidual = {:.3e} \
                 (iterations {}, start {})",
                sides[0], sides[1], sides[2], result.residual, result.iterations,
                result.start_used,
            );
            emit(cli.json, payload, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wolff { la, lb, lc } => {
            let l = [parse_exact(la)?, parse_exact(lb)?, parse_exact(lc)?];
            let data = WolffData::from_bisectors(&l).map_err(domain)?;
            let recovered = recover_bisectors(&data.a2, &data.a3, &data.a4)
                .map_err(domain)?;
            let floats = [
                rational_to_f64(&l[0]),
                rational_to_f64(&l[1]),
                rational_to_f64(&l[2]),
            ];
            let incircle_residual = check_incircle_root(floats, &SolverConfig::default()).ok();
            let payload = command_payload(
                "wolff",
                json!({ "bisectors": [l[0].to_string(), l[1].to_string(), l[2].to_string()] }),
                json!({
                    "a2": data.a2.to_string(),
                    "a3": data.a3.to_string(),
                    "a4": data.a4.to_string(),
                    "w_coefficients": data.w.to_coeff_string(),
                    "u_coefficients": data.u.to_coeff_string(),
                    "v_coefficients": data.v.to_coeff_string(),
                }),
                json!({
                    "recovered_bisectors": recovered,
                    "incircle_root_residual": incircle_residual,
                }),
            );
            let text = format!(
                "a2 = {}\na3 = {}\na4 = {}\nW(t) = {}\nU(t) = {}\nV(t) = {}\n\
                 recovered bisectors = {recovered:?}\nincircle-root residual = {:?}",
                data.a2, data.a3, data.a4, data.w, data.u, data.v, incircle_residual,
            );
            emit(cli.json, payload, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Galois { poly, prime_bound } => {
            let f = parse_poly(poly)?;
            if f.degree().unwrap_or(0) < 2 {
                return Err(CliError::Usage(
                    "UsageError: the certificate needs degree >= 2".to_string(),
                ));
            }
            let cert = symmetric_group_certificate(&f, *prime_bound);
            let payload = command_payload(
                "galois",
                json!({ "poly": f.to_coeff_string(), "prime_bound": prime_bound }),
                serde_json::to_value(&cert).expect("certificate serializes"),
                json!({
                    "cycle_type_count": cert.cycle_types.len(),
                }),
            );
            let text = format!(
                "polynomial: {f}\nverdict: {:?}\nirreducibility: {:?}\n\
                 long prime cycle: {:?}\ndiscriminant square: {}\nprimes sampled: {}",
                cert.verdict,
                cert.irreducibility,
                cert.long_prime_cycle,
                cert.discriminant_is_square,
                cert.primes_sampled.len(),
            );
            emit(cli.json, payload, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Constructible { poly } => {
            let f = parse_poly(poly)?;
            let verdict = constructibility_verdict(&f);
            let payload = command_payload(
                "constructible",
                json!({ "poly": f.to_coeff_string() }),
                serde_json::to_value(&verdict).expect("verdict serializes"),
                json!({ "degree": verdict.degree }),
            );
            let text = format!(
                "polynomial: {f}\nverdict: {:?}\nreason: {}",
                verdict.verdict, verdict.reason
            );
            emit(cli.json, payload, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical { la, lb, lc, prime_bound } => {
            let l = [parse_exact(la)?, parse_exact(lb)?, parse_exact(lc)?];
            if l.iter().any(|x| x <= &Rational::from_integer(0.into())) {
                return Err(CliError::Domain(
                    "NonPositiveInput: bisectors must be positive".to_string(),
                ));
            }
            let report = radical_solvability_report(&l, *prime_bound);
            let payload = command_payload(
                "radical",
                json!({
                    "bisectors": [l[0].to_string(), l[1].to_string(), l[2].to_string()],
                    "prime_bound": prime_bound,
                }),
                serde_json::to_value(&report).expect("report serializes"),
                json!({ "verdict": report.verdict }),
            );
            let text = format!("verdict: {:?}\n{}", report.verdict, report.narrative.join("\n"));
            emit(cli.json, payload, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::ReproducePaper {
            tolerance,
            prime_bound,
            corpus,
            seed,
            precision,
        } => {
            let opts = ReportOptions {
                tolerance_override: *tolerance,
                prime_bound: *prime_bound,
                corpus: *corpus,
                seed: *seed,
                precision: *precision,
            };
            let report = run_report(&opts);
            if cli.json {
                println!("{}", serde_json::to_string(&report.to_json()).expect("serializable"));
            } else {
                print!("{}", report.render_table());
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
