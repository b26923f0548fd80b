//! End-to-end tests against the built binary.

use std::process::{Command, Output};

use horadam_gf::polyring::{parse, Polynomial};
use horadam_gf::verify::{Status, VerifyReport};

fn horagf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horagf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn gf_fibonacci_k1() {
    let out = horagf(&["gf", "--preset", "fibonacci", "--k", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("reduced: x / (1 - x - x^2)"));
}

#[test]
fn gf_explicit_pell_parameters() {
    let out = horagf(&["gf", "--a", "0", "--b", "1", "--p", "2", "--q", "1", "--k", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("reduced: x / (1 - 2*x - x^2)"));
}

#[test]
fn gf_symbolic_k1() {
    let out = horagf(&["gf", "--symbolic", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("numerator: a + b*x - a*p*x"));
    assert!(text.contains("denominator: 1 - p*x - q*x^2"));
}

#[test]
fn gf_json_round_trips_documented_schema() {
    let out = horagf(&["gf", "--preset", "fibonacci", "--k", "2", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["k"], 2);
    assert_eq!(value["params"]["a"], "0");
    let num = Polynomial::from_json(&value["reduced_num"]).unwrap();
    assert_eq!(num, parse("x - x^2").unwrap());
    let den = Polynomial::from_json(&value["denominator"]).unwrap();
    assert_eq!(den, parse("1 - 2*x - 2*x^2 + x^3").unwrap());
}

#[test]
fn gf_output_is_byte_deterministic() {
    let first = horagf(&["gf", "--preset", "chebyshev-u", "--k", "3", "--json"]);
    let second = horagf(&["gf", "--preset", "chebyshev-u", "--k", "3", "--json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn series_fibonacci_squares() {
    let out = horagf(&["series", "--preset", "fibonacci", "--k", "2", "--n", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0 1 1 4 9 25 64");
}

#[test]
fn series_single_coefficient() {
    let out = horagf(&["series", "--preset", "fibonacci", "--k", "1", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn series_oracle_flag_reports_match() {
    let out = horagf(&["series", "--preset", "lucas", "--k", "1", "--n", "6", "--oracle"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("oracle: 2 1 3 4 7 11"));
    assert!(text.contains("match: true"));
}

#[test]
fn series_chebyshev_prints_t_polynomials() {
    let out = horagf(&["series", "--preset", "chebyshev-u", "--k", "1", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x^1: 2*t"));
    assert!(text.contains("x^2: -1 + 4*t^2"));
}

#[test]
fn series_fully_symbolic_needs_json() {
    let out = horagf(&["series", "--symbolic", "--k", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--json"));
    let json_out = horagf(&["series", "--symbolic", "--k", "1", "--n", "3", "--json"]);
    assert!(json_out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(value["coeffs"][1], "b");
}

#[test]
fn eval_table_points() {
    let out = horagf(&["eval", "--preset", "fibonacci", "--k", "4", "--x", "1/100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "31986700/3161716833");
    // The Lucas row k=3 of the printed table is an erratum; the engine
    // returns the oracle-confirmed value.
    let lucas = horagf(&["eval", "--preset", "lucas", "--k", "3", "--x", "1/100"]);
    assert!(lucas.status.success());
    assert_eq!(stdout(&lucas).trim(), "776760100/96940301");
    let zero = horagf(&["eval", "--preset", "fibonacci", "--k", "1", "--x", "0"]);
    assert_eq!(stdout(&zero).trim(), "0");
}

#[test]
fn eval_pole_is_reported() {
    let out = horagf(&["eval", "--a", "0", "--b", "1", "--p", "1", "--q", "0", "--k", "1", "--x", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("pole"));
}

#[test]
fn eval_negative_rational_point() {
    let out = horagf(&["eval", "--preset", "pell", "--k", "1", "--x", "-1/3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-3/14");
}

#[test]
fn verify_full_run_has_no_fail() {
    let out = horagf(&["verify"]);
    assert!(out.status.success(), "verify must exit 0 when no FAIL");
    let text = stdout(&out);
    assert!(text.contains("ERRATUM table3 k=4 gf"));
    assert!(text.contains("ERRATUM table2 k=2 point"));
    assert!(text.contains(", 0 fail"));
}

#[test]
fn verify_json_round_trips() {
    let out = horagf(&["verify", "--only", "corollary", "--json"]);
    assert!(out.status.success());
    let reports: Vec<VerifyReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), 4);
    assert_eq!(reports[0].status, Status::Pass);
    assert_eq!(reports[1].status, Status::Erratum);
    assert!(reports[1].corrected.is_some());
}

#[test]
fn verify_only_rejects_unknown_group() {
    let out = horagf(&["verify", "--only", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    let missing_k = horagf(&["gf", "--preset", "fibonacci"]);
    assert_eq!(missing_k.status.code(), Some(1));
    let two_sources = horagf(&["gf", "--preset", "fibonacci", "--symbolic", "--k", "1"]);
    assert_eq!(two_sources.status.code(), Some(1));
    let unknown_preset = horagf(&["gf", "--preset", "tribonacci", "--k", "1"]);
    assert_eq!(unknown_preset.status.code(), Some(1));
    let partial_explicit = horagf(&["gf", "--a", "1", "--b", "2", "--k", "1"]);
    assert_eq!(partial_explicit.status.code(), Some(1));
    let help = horagf(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}
