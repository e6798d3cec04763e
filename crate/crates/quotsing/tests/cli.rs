use std::process::Command;

use serde_json::Value;

use quotsing::cli::{run, EXIT_OK, EXIT_USAGE};
use quotsing::fanfile::read_fan_in;
use quotsing_core::model::{build_model, check_names, expected_fan};
use quotsing_core::toric::fan_isomorphic;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["quotsing"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn strip_timings(v: &mut Value) {
    for c in v["checks"].as_array_mut().unwrap() {
        c["millis"] = Value::Null;
    }
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(call(&["verify", "--n", "7"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--n", "2", "--checks", "nonsense"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--n", "2", "--i-max", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["fan", "--n", "2", "--star", "9"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["verify", "--n", "2", "--out", "/nonexistent/dir/report.json"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot write"));
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn json_report_schema() {
    let (code, out, _) = call(&["verify", "--n", "2", "--checks", "model,properties", "--seed", "3"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["config"]["seed"], 3);
    assert_eq!(v["config"]["format"], "json");
    let checks = v["checks"].as_array().unwrap();
    for name in check_names() {
        assert!(checks.iter().any(|c| c["name"] == *name), "{name}");
    }
    for c in checks {
        assert!(c["citation"].is_string() && c["millis"].is_u64() && c.get("witness").is_some());
        assert!(["pass", "skipped", "info"].contains(&c["status"].as_str().unwrap()), "{c}");
    }
}

#[test]
fn reports_are_deterministic_up_to_timings() {
    let args = ["verify", "--n", "3", "--i-max", "2", "--seed", "11"];
    let mut a: Value = serde_json::from_str(&call(&args).1).unwrap();
    let mut b: Value = serde_json::from_str(&call(&args).1).unwrap();
    strip_timings(&mut a);
    strip_timings(&mut b);
    assert_eq!(a, b);
}

#[test]
fn n2_cohomology_is_exploratory() {
    let (code, out, _) = call(&["verify", "--n", "2", "--checks", "cohomology", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().all(|l| l.starts_with("info") || l.starts_with("pass")), "{out}");
}

#[test]
fn report_file_and_summary() {
    let dir = std::env::temp_dir().join(format!("quotsing-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let (code, out, _) = call(&["verify", "--n", "1", "--checks", "model", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0 failed"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["n"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fan_export_round_trips() {
    for n in 1..=3 {
        let (code, out, _) = call(&["fan", "--n", &n.to_string()]);
        assert_eq!(code, EXIT_OK);
        let lattice = build_model(n).unwrap().lattice;
        let fan = read_fan_in(&out, &lattice).unwrap();
        assert!(fan.relabeling_to(&expected_fan(n).unwrap()).is_some());
    }
}

#[test]
fn star_export_is_a_complete_smooth_fan() {
    let (code, out, _) = call(&["fan", "--n", "2", "--star", "5"]);
    assert_eq!(code, EXIT_OK);
    let star = quotsing::fanfile::read_fan(&out).unwrap();
    assert_eq!(star.rank(), 3);
    assert!(star.is_complete() && star.is_smooth());
    let bundle = quotsing_core::toric::projbundle_fan(2, 2).unwrap();
    assert!(fan_isomorphic(&star, &bundle).unwrap().is_some());
}

#[test]
fn cohomology_examples() {
    let (code, out, _) = call(&["cohomology", "--n", "2", "--t", "1", "--l", "1", "--oracle-check"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("= (8, 0, 0, 0)"), "{out}");
    assert!(out.contains("agree"));
    let (code, _, _) = call(&["cohomology", "--n", "3", "--t", "2", "--l", "-1", "--oracle-check"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, err) = call(&["cohomology", "--n", "3", "--t", "-4", "--l", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn binary_warns_when_caps_are_lifted() {
    let bin = env!("CARGO_BIN_EXE_quotsing");
    let plain = Command::new(bin).args(["cohomology", "--n", "2", "--t", "0", "--l", "0"]).env_remove("QUOTSING_UNSAFE_CAPS").output().unwrap();
    assert!(plain.status.success());
    assert!(plain.stderr.is_empty());
    let lifted = Command::new(bin)
        .args(["cohomology", "--n", "2", "--t", "0", "--l", "0"])
        .env("QUOTSING_UNSAFE_CAPS", "1")
        .output()
        .unwrap();
    assert!(lifted.status.success());
    assert!(String::from_utf8_lossy(&lifted.stderr).contains("warning"));
    let bad = Command::new(bin).args(["verify", "--n", "9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
