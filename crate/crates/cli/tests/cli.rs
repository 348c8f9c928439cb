//! End-to-end tests of the binary: output contracts, exit codes,
//! determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stieltjes"))
        .args(args)
        .env_remove("STIELTJES_PRECISION_PROFILE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn eval_both_methods_agree() {
    let out = run(&["eval", "--k", "1", "--a", "1/2", "--method", "both"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "k,a_num,a_den,method,value,err_estimate,delta"
    );
    let closed: Vec<&str> = lines.next().unwrap().split(',').collect();
    let oracle: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&closed[..4], &["1", "1", "2", "closed_form"]);
    assert_eq!(oracle[3], "oracle");
    let delta: f64 = closed[6].parse().unwrap();
    assert!(delta.abs() < 1e-9, "delta = {delta}");
    let value: f64 = oracle[4].parse().unwrap();
    assert!((value + 1.3534596808049415).abs() < 1e-12);
}

#[test]
fn eval_euler_constant() {
    let out = run(&["eval", "--k", "0", "--a", "1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let value: f64 = row.split(',').nth(4).unwrap().parse().unwrap();
    assert!((value - 0.5772156649015329).abs() < 1e-14);
}

#[test]
fn eval_json_is_parseable() {
    let out = run(&["eval", "--k", "2", "--a", "3/4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(parsed["k"], 2);
    assert_eq!(parsed["a_num"], 3);
    assert_eq!(parsed["a_den"], 4);
    assert_eq!(parsed["method"], "oracle");
    let value = parsed["value"].as_f64().unwrap();
    assert!((value - 0.119_376_626_018_584_22).abs() < 1e-12);
}

#[test]
fn eval_domain_error_exits_3() {
    let out = run(&["eval", "--k", "1", "--a", "0"]);
    assert_eq!(exit_code(&out), 3);
    let out = run(&["eval", "--k", "7", "--a", "1/2"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn eval_usage_error_exits_2() {
    let out = run(&["eval", "--a", "1/2"]); // missing --k
    assert_eq!(exit_code(&out), 2);
    let out = run(&["eval", "--k", "1", "--a", "x/y"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn integrate_i2_value() {
    let out = run(&["integrate", "--family", "i2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("family,k,params,route,value,imag_residual,delta"));
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let value: f64 = row[4].parse().unwrap();
    assert!((value + 0.260_442_806_300_988_4).abs() < 1e-9);
    let delta: f64 = row[6].parse().unwrap();
    assert!(delta.abs() < 1e-9);
}

#[test]
fn integrate_ipq_both_routes() {
    let out = run(&[
        "integrate",
        "--family",
        "i_pq",
        "--k",
        "1",
        "--p",
        "1",
        "--q",
        "3",
        "--method",
        "both",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let delta: f64 = row[6].parse().unwrap();
    assert!(delta.abs() < 1e-7, "delta = {delta}");
}

#[test]
fn integrate_singular_delta_exits_3() {
    let out = run(&["integrate", "--family", "i_omega", "--delta", "0"]);
    assert_eq!(exit_code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("singular"), "stderr: {err}");
}

#[test]
fn integrate_unknown_family_exits_2() {
    let out = run(&["integrate", "--family", "nope"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_single_check_passes() {
    let out = run(&["verify", "--check", "prop1", "--m-max", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("check prop1"));
    assert!(text.contains("PASS"));
}

#[test]
fn verify_unknown_check_exits_2() {
    let out = run(&["verify", "--check", "prop99"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_impossible_tolerance_exits_4() {
    let out = run(&["verify", "--check", "constants", "--tol", "1e-30"]);
    assert_eq!(exit_code(&out), 4);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn table_row_count_and_determinism() {
    let args = ["table", "--k", "1,2", "--m-max", "6", "--format", "csv"];
    let first = run(&args);
    assert_eq!(exit_code(&first), 0);
    let text = stdout(&first);
    // 2 indices x sum_{m=2..6} (m-1) = 30 rows plus the header.
    assert_eq!(text.lines().count(), 31);
    // Rows sorted by (m, j, k): first data row is m=2, j=1, k=1.
    assert!(text.lines().nth(1).unwrap().starts_with("1,1,2,"));
    let second = run(&args);
    assert_eq!(
        first.stdout, second.stdout,
        "table output must be byte-identical"
    );
}

#[test]
fn table_json_rows_parse() {
    let out = run(&[
        "table", "--k", "1", "--m-max", "3", "--method", "both", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut rows = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["delta"].is_number());
        rows += 1;
    }
    // Three (m, j) pairs, two records each under --method both.
    assert_eq!(rows, 6);
}

#[test]
fn eval_closed_digamma_route() {
    // k = 0 closed form goes through the finite cosine sum over ln Gamma.
    let out = run(&["eval", "--k", "0", "--a", "1/3", "--method", "both"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let closed: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let value: f64 = closed[4].parse().unwrap();
    assert!((value - 3.132033780020806323).abs() < 1e-11, "got {value}");
    let delta: f64 = closed[6].parse().unwrap();
    assert!(delta.abs() < 1e-9);
    // Closed forms need a proper rational argument.
    let out = run(&["eval", "--k", "1", "--a", "0.4", "--method", "closed"]);
    assert_eq!(exit_code(&out), 3);
    let out = run(&["eval", "--k", "3", "--a", "1/3", "--method", "closed"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn bad_precision_profile_exits_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_stieltjes"))
        .args(["eval", "--k", "0", "--a", "1"])
        .env("STIELTJES_PRECISION_PROFILE", "bogus")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 2);
}

#[test]
fn strict_profile_accepted_and_accurate() {
    let out = Command::new(env!("CARGO_BIN_EXE_stieltjes"))
        .args(["eval", "--k", "0", "--a", "1"])
        .env("STIELTJES_PRECISION_PROFILE", "strict")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let value: f64 = text.lines().nth(1).unwrap().split(',').nth(4).unwrap().parse().unwrap();
    assert!((value - 0.5772156649015329).abs() < 1e-14);
}
