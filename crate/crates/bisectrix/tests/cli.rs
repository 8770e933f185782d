//! End-to-end tests of the command-line interface: argument formats, the
//! JSON schema, and the exit-code contract (0 success, 1 domain error or
//! failed check, 2 usage error).

use serde_json::Value;
use std::process::{Command, Output};

fn bisectrix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bisectrix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

#[test]
fn forward_right_triangle() {
    let out = bisectrix(&["forward", "3", "4", "5", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["command"], "forward");
    assert_eq!(v["outputs"]["area"], 6.0);
    assert_eq!(v["outputs"]["inradius"], 1.0);
    let medians_area = v["evidence"]["area_from_medians"].as_f64().unwrap();
    assert!((medians_area - 6.0).abs() < 1e-12);
}

#[test]
fn json_round_trips_byte_identical() {
    for args in [
        vec!["forward", "3", "4", "5", "--json"],
        vec!["solve", "1", "1/3", "1/3", "--json"],
        vec!["wolff", "1", "2", "3", "--json"],
        vec!["constructible", "6,-3,-12,4", "--json"],
        vec!["galois", "6,-3,-12,4", "--json"],
    ] {
        let out = bisectrix(&args);
        assert!(out.status.success(), "{args:?} failed: {out:?}");
        let emitted = String::from_utf8(out.stdout.clone()).unwrap();
        let emitted = emitted.trim_end();
        let parsed: Value = serde_json::from_str(emitted).unwrap();
        assert_eq!(
            serde_json::to_string(&parsed).unwrap(),
            emitted,
            "round trip for {args:?}"
        );
    }
}

#[test]
fn solve_isosceles_triple() {
    let out = bisectrix(&["solve", "1", "1/3", "1/3", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let area = v["outputs"]["area"].as_f64().unwrap();
    assert!((area - 0.141264).abs() < 1e-5, "area {area}");
    let residual = v["evidence"]["residual"].as_f64().unwrap();
    assert!(residual <= 1e-12);
}

#[test]
fn wolff_exact_invariants() {
    let out = bisectrix(&["wolff", "1", "2", "3", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["outputs"]["a2"], "49/36");
    assert_eq!(v["outputs"]["a3"], "1/6");
    assert_eq!(v["outputs"]["a4"], "7/18");
    let coeffs = v["outputs"]["w_coefficients"].as_str().unwrap();
    assert_eq!(coeffs.split(',').count(), 11);
    assert!(coeffs.ends_with(",0,1"), "monic with zero t^9: {coeffs}");
}

#[test]
fn constructible_verdicts() {
    let out = bisectrix(&["constructible", "6,-3,-12,4", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["outputs"]["verdict"], "NotConstructible");

    let out = bisectrix(&["constructible", "-2,0,1", "--json"]);
    assert_eq!(stdout_json(&out)["outputs"]["verdict"], "Constructible");

    let out = bisectrix(&["constructible", "1,0,0,0,1", "--json"]);
    assert_eq!(stdout_json(&out)["outputs"]["verdict"], "Unknown");
}

#[test]
fn exit_codes() {
    // domain error: degenerate triangle -> 1, error name on stderr
    let out = bisectrix(&["forward", "1", "1", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("InvalidTriangle"));

    // domain error: non-positive bisector
    let out = bisectrix(&["solve", "1", "-1", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NonPositiveInput"));

    // usage error: malformed polynomial -> 2
    let out = bisectrix(&["galois", "not-a-poly"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("UsageError"));

    // usage error: unknown flag -> clap exits 2
    let out = bisectrix(&["forward", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));

    // missing arguments -> 2
    let out = bisectrix(&["solve", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_paper_small_corpus() {
    let out = bisectrix(&[
        "reproduce-paper",
        "--corpus",
        "50",
        "--seed",
        "7",
        "--json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);

    // deterministic: the same seed reruns to the same verdicts
    let again = bisectrix(&[
        "reproduce-paper",
        "--corpus",
        "50",
        "--seed",
        "7",
        "--json",
    ]);
    let w = stdout_json(&again);
    for (a, b) in v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .zip(w["checks"].as_array().unwrap())
    {
        assert_eq!(a["status"], b["status"]);
        assert_eq!(a["name"], b["name"]);
    }

    // JSON round trip of the full report
    let emitted = String::from_utf8(out.stdout.clone()).unwrap();
    let emitted = emitted.trim_end();
    let parsed: Value = serde_json::from_str(emitted).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), emitted);
}

#[test]
fn reproduce_paper_starved_prime_bound_exits_nonzero() {
    let out = bisectrix(&[
        "reproduce-paper",
        "--corpus",
        "10",
        "--prime-bound",
        "2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], false);
    let s10 = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "s10_certificate")
        .unwrap();
    assert_eq!(s10["status"], "Inconclusive");
}
