//! End-to-end contract tests for the `narayana` binary: output bytes, JSON
//! shapes, exit codes, and the bench record format.

use std::process::{Command, Output};

use serde::{Deserialize, Serialize};
use serde_json::Value;

fn narayana(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_narayana"))
        .args(args)
        .output()
        .expect("the binary should run")
}

/// Runs the binary, demands success, and returns stdout as UTF-8.
fn stdout_of(args: &[&str]) -> String {
    let out = narayana(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    narayana(args).status.code().expect("exited normally")
}

#[test]
fn poly_plain_matches_the_triangle_rows() {
    assert_eq!(stdout_of(&["poly", "--r", "1"]), "1\n");
    assert_eq!(stdout_of(&["poly", "--r", "4"]), "1 6 6 1\n");
    assert_eq!(
        stdout_of(&["poly", "--r", "8"]),
        "1 28 196 490 490 196 28 1\n"
    );
}

#[test]
fn poly_json_is_the_frozen_shape() {
    assert_eq!(
        stdout_of(&["poly", "--r", "1", "--method", "recurrence", "--format", "json"]),
        "{\"r\":1,\"method\":\"recurrence\",\"coeffs\":[\"1\"]}\n"
    );
}

#[test]
fn poly_csv_has_an_ascending_degree_header() {
    assert_eq!(
        stdout_of(&["poly", "--r", "3", "--method", "moment", "--format", "csv"]),
        "c0,c1,c2\n1,3,1\n"
    );
}

#[test]
fn the_three_methods_render_identically() {
    for r in ["1", "2", "5", "17"] {
        let direct = stdout_of(&["poly", "--r", r, "--method", "direct"]);
        for method in ["recurrence", "moment"] {
            assert_eq!(
                stdout_of(&["poly", "--r", r, "--method", method]),
                direct,
                "method {method} at r = {r}"
            );
        }
    }
}

/// Mirror of the binary's poly record, used to prove the JSON round-trips.
#[derive(Serialize, Deserialize)]
struct PolyRecord {
    r: u32,
    method: String,
    coeffs: Vec<String>,
}

#[test]
fn poly_json_round_trips_byte_identically() {
    let line = stdout_of(&["poly", "--r", "10", "--format", "json"]);
    let parsed: PolyRecord = serde_json::from_str(line.trim_end()).expect("valid JSON");
    assert_eq!(serde_json::to_string(&parsed).unwrap(), line.trim_end());
}

#[test]
fn seq_emits_the_frozen_prefixes() {
    assert_eq!(stdout_of(&["seq", "catalan", "5"]), "1\n2\n5\n14\n42\n");
    assert_eq!(stdout_of(&["seq", "lassalle", "4"]), "1\n1\n5\n56\n");
    assert_eq!(
        stdout_of(&["seq", "schroder-half", "3"]),
        "1/2\n3/2\n11/2\n"
    );
    assert_eq!(stdout_of(&["seq", "narayana-row", "4"]), "1\n6\n6\n1\n");
}

#[test]
fn seq_weighted_sums_match_their_closed_forms() {
    assert_eq!(
        stdout_of(&["seq", "weighted1", "8"]),
        "0\n1\n5\n21\n84\n330\n1287\n5005\n"
    );
    assert_eq!(
        stdout_of(&["seq", "weighted2", "8"]),
        "0\n0\n2\n18\n112\n600\n2970\n14014\n"
    );
}

#[test]
fn seq_json_and_csv_shapes() {
    assert_eq!(
        stdout_of(&["seq", "catalan", "3", "--format", "json"]),
        "{\"name\":\"catalan\",\"n\":3,\"values\":[\"1\",\"2\",\"5\"]}\n"
    );
    assert_eq!(
        stdout_of(&["seq", "catalan", "3", "--format", "csv"]),
        "value\n1\n2\n5\n"
    );
}

#[test]
fn verify_single_identity_reports_pass() {
    assert_eq!(
        stdout_of(&["verify", "eq3", "--r-max", "10"]),
        "{\"identity\":\"eq3\",\"r_range\":[3,10],\"status\":\"pass\"}\n"
    );
}

#[test]
fn verify_fault_injection_exits_1_with_a_fail_report() {
    let out = narayana(&["verify", "eq4", "--r-max", "5", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value =
        serde_json::from_slice(&out.stdout).expect("a JSON report even on failure");
    assert_eq!(report["identity"], "eq4");
    assert_eq!(report["status"], "fail");
    assert_eq!(report["first_failure"]["r"], 2);
    assert!(report["first_failure"]["residual"]
        .as_str()
        .unwrap()
        .contains("nonzero residual"));
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["poly", "--r", "0"],
        &["poly", "--r", "four"],
        &["poly", "--r", "4", "--format", "yaml"],
        &["poly", "--r", "4", "--method", "magic"],
        &["verify", "nonsense"],
        &["verify", "eq3", "--r-max", "2"],
        &["seq", "catalan", "0"],
        &["seq", "fibonacci", "5"],
        &["bench", "--r-max", "2"],
        &["bench", "--reps", "0"],
        &[],
    ];
    for args in cases {
        assert_eq!(exit_code(args), 2, "args {args:?}");
    }
}

#[test]
fn output_flag_writes_the_file_instead_of_stdout() {
    let path = std::env::temp_dir().join(format!("narayana-cli-test-{}.txt", std::process::id()));
    let path_str = path.to_str().expect("temp path is UTF-8");
    let out = narayana(&["poly", "--r", "4", "--output", path_str]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 6 6 1\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn bench_smoke_emits_one_record_per_method() {
    let out = stdout_of(&["bench", "--r-max", "3", "--reps", "1"]);
    let records: Vec<Value> = out
        .lines()
        .map(|line| serde_json::from_str(line).expect("JSON-lines records"))
        .collect();
    assert_eq!(records.len(), 3);
    for (record, method) in records.iter().zip(["direct", "recurrence", "moment"]) {
        assert_eq!(record["method"], method);
        assert_eq!(record["r"], 3);
        assert!(record["wall_time_ns"].as_u64().is_some());
        assert!(record["max_coeff_bits"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn bench_direct_coefficient_bits_grow_with_r() {
    let out = stdout_of(&[
        "bench", "--r-max", "25", "--reps", "1", "--methods", "direct", "--format", "csv",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("method,r,wall_time_ns,max_coeff_bits"));
    let mut last_r = 0;
    let mut last_bits = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], "direct");
        let r: u32 = fields[1].parse().unwrap();
        let bits: u64 = fields[3].parse().unwrap();
        assert!(r > last_r, "ladder must ascend: {r} after {last_r}");
        assert!(bits >= last_bits, "bits must not shrink: {bits} after {last_bits}");
        last_r = r;
        last_bits = bits;
    }
    assert_eq!(last_r, 25, "the ladder always ends at r_max");
}
