use std::process::{Command, Output};

use serde_json::Value;

fn nsjack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsjack")).args(args).env_remove("NSJACK_CACHE_DIR").output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn jack_polynomial_terms() {
    let out = nsjack(&["jack", "--eta", "1,0", "--n", "2", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let expected: Value = serde_json::from_str(r#"[[[1,0],"1","1"],[[0,1],"1","2"]]"#).unwrap();
    assert_eq!(v["terms"], expected);
}

#[test]
fn evaluation_at_ones() {
    let out = nsjack(&["eval-ones", "--eta", "1,0", "--n", "2", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), Value::String("3/2".into()));
}

#[test]
fn output_is_deterministic() {
    let args = ["hermite", "--eta", "2,0,1", "--alpha", "7/5"];
    assert_eq!(nsjack(&args).stdout, nsjack(&args).stdout);
}

#[test]
fn scalar_subcommands() {
    let norm = nsjack(&["norm", "--family", "ct", "--eta", "1,0", "--alpha", "1"]);
    assert_eq!(stdout_json(&norm), Value::String("3/2".into()));
    let binom = nsjack(&["binomial", "--eta", "1,1", "--nu", "0,1", "--alpha", "2"]);
    assert_eq!(stdout_json(&binom), Value::String("2/3".into()));
    let lag = nsjack(&["norm", "--family", "laguerre", "--eta", "1,0", "--alpha", "1", "--a", "0"]);
    assert_eq!(stdout_json(&lag), Value::String("3".into()));
}

#[test]
fn kernel_and_csv_output() {
    let out = nsjack(&["kernel", "--family", "A", "--degree", "3", "--n", "1", "--alpha", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "e1,e2,numerator,denominator\n3,3,1,6\n2,2,1,2\n1,1,1,1\n0,0,1,1\n");
    let missing = nsjack(&["kernel", "--family", "2K1", "--degree", "2", "--n", "1", "--alpha", "1"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn verify_constant_term_suite_passes() {
    let out = nsjack(&["verify", "--suite", "ct", "--max-weight", "3", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert!(!v["reports"].as_array().unwrap().is_empty());
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = nsjack(&[
        "verify",
        "--suite",
        "jack",
        "--alpha-set",
        "1,1/2",
        "--max-weight",
        "2",
        "--max-n",
        "2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("kind,check,n,alpha,params,D,status,detail\n"));
    assert!(text.lines().skip(1).all(|l| l.contains(",pass,")));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["jack", "--eta", "1,0", "--alpha", "x/2"][..],
        &["jack", "--eta", "1,-1", "--alpha", "1"],
        &["jack", "--eta", "1,0", "--n", "1", "--alpha", "1"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--check", "no-such-check"],
        &["norm", "--family", "ct", "--eta", "1", "--alpha", "2"],
    ] {
        assert_eq!(nsjack(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cache_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nsjack"))
            .args(["jack", "--eta", "2,1", "--alpha", "1/2"])
            .env("NSJACK_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    assert!(dir.path().join("jack-n2-alpha1_2.json").exists());
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, nsjack(&["jack", "--eta", "2,1", "--alpha", "1/2"]).stdout);
}
