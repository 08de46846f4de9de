use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn weyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(args)
        .env_remove("WEYL_CONFIG")
        .output()
        .expect("binary runs")
}

fn json_reports(out: &Output) -> Vec<Value> {
    let parsed: Value = serde_json::from_slice(&out.stdout).expect("valid json");
    parsed.as_array().expect("array of reports").clone()
}

#[test]
fn nested_anticomm_six_gives_seven_passes() {
    let out = weyl(&["verify", "bender", "--max-n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 7);
    for (n, r) in reports.iter().enumerate() {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["params"]["n"], n);
        for key in ["suite", "params", "status", "witness", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
    assert_eq!(reports[6]["data"]["polynomial"][0], "-61/64");
}

#[test]
fn sequences_json_carries_kappa() {
    let out = weyl(&["verify", "sequences", "--max-n", "16", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json_reports(&out);
    let kappa = &reports[0]["data"]["kappa"];
    let head: Vec<&str> = (0..4).map(|i| kappa[i].as_str().unwrap()).collect();
    assert_eq!(head, ["0", "1/2", "0", "-1/4"]);
    assert_eq!(kappa[9], "31/2");
}

#[test]
fn trivial_convolution_range() {
    let out = weyl(&[
        "verify", "pain", "--max-n", "0", "--max-m", "0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["status"], "pass");
}

#[test]
fn json_is_deterministic_without_timing() {
    let args = [
        "verify",
        "oracles",
        "--cases",
        "5",
        "--format",
        "json",
        "--no-timing",
        "--seed",
        "9",
    ];
    let first = weyl(&args);
    let second = weyl(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(json_reports(&first)
        .iter()
        .all(|r| r["elapsed_ms"].is_null()));
}

#[test]
fn non_terminating_fixture_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.toml");
    fs::write(&path, "[[fixture]]\nh0 = \"1 * p^2\"\nx = \"1 * q p\"\n").unwrap();
    let out = weyl(&[
        "verify",
        "figueira",
        "--fixture",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["status"], "error");
}

#[test]
fn text_mode_lists_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.toml");
    fs::write(&path, "[[fixture]]\nh0 = \"1 * p^2\"\nx = \"1 * q p\"\n").unwrap();
    let out = weyl(&["verify", "figueira", "--fixture", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0/1"), "{text}");
    assert!(text.contains("error figueira"), "{text}");
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        &["verify", "nonsense"][..],
        &["verify", "bender", "--max-n", "-3"],
        &["verify", "hermite", "--tol", "-1"],
        &["verify", "hermite", "--dim", "2"],
        &["verify", "bender", "--format", "yaml"],
        &[
            "verify",
            "figueira",
            "--fixture",
            "/nonexistent/fixtures.toml",
        ],
    ] {
        assert_eq!(weyl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_fixture_is_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.toml");
    fs::write(&path, "[[fixture]]\nh0 = \"p ^^ 2\"\nx = \"q\"\n").unwrap();
    let out = weyl(&["verify", "figueira", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weyl.toml");
    fs::write(&path, "max_n = 2\nformat = \"json\"\nno_timing = true\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(["verify", "bender"])
        .env("WEYL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 3);
    assert!(reports[0]["elapsed_ms"].is_null());

    let overridden = Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(["verify", "bender", "--max-n", "4"])
        .env("WEYL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(json_reports(&overridden).len(), 5);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = weyl(&[
        "verify",
        "combinatorics",
        "--max-n",
        "2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let parsed: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 5);
}

#[test]
fn tables_json_rows() {
    let out = weyl(&["tables", "--max-n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let t: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        t["euler_polynomial"][2]["coeffs"],
        serde_json::json!(["0", "-1", "1"])
    );
    assert_eq!(t["euler_at_zero"][1]["value"], "-1/2");
    assert_eq!(t["bernoulli"][2]["value"], "1/6");
    assert_eq!(t["euler_number"][6]["value"], "-61");
}
