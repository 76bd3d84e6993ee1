//! Integration tests for the command-line surface: exit codes, report
//! content, and the dump formats.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_boundary-weights"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn classify_reports_interval() {
    let report = json_of(&["classify", "--lambda", r#"{"k1":[3],"k2":[1]}"#]);
    assert_eq!(report["avoidedInterval"]["lo"], 0);
    assert_eq!(report["avoidedInterval"]["hi"], 1);
    assert_eq!(report["lambda"]["c"], 4);
}

#[test]
fn classify_corank_two() {
    let report = json_of(&["classify", "--lambda", r#"{"k1":[2,2],"k2":[2,2]}"#]);
    assert_eq!(report["weights01Present"], true);
    assert_eq!(report["intersectionMotiveExists"], false);
    assert_eq!(report["corank"], 2);
}

#[test]
fn classify_rejects_non_dominant() {
    let out = run(&["classify", "--lambda", r#"{"k1":[1],"k2":[2]}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotDominant"));
}

#[test]
fn classify_rejects_malformed_json() {
    let out = run(&["classify", "--lambda", r#"{"k1":[1]"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_reads_weight_from_file() {
    let dir = std::env::temp_dir().join(format!("bw-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weight.json");
    std::fs::write(&path, r#"{"k1":[3],"k2":[1],"c":4}"#).unwrap();
    let report = json_of(&["classify", "--lambda", path.to_str().unwrap()]);
    assert_eq!(report["avoidedInterval"]["hi"], 1);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn boundary_zero_report() {
    let report = json_of(&["classify", "--lambda", r#"{"k1":[5,4],"k2":[1,3]}"#]);
    assert_eq!(report["boundaryZero"], true);
    assert_eq!(report["avoidedInterval"], "ALL");
    assert_eq!(report["appearingWeights"].as_array().unwrap().len(), 0);
}

#[test]
fn profile_single_stratum_is_array() {
    let value = json_of(&[
        "profile",
        "--lambda",
        r#"{"k1":[3],"k2":[1]}"#,
        "--stratum",
        "siegel",
    ]);
    let entries = value.as_array().unwrap();
    assert_eq!(entries.len(), 5); // degrees 0..=6d-2 at d=1
    assert_eq!(entries[1]["summands"][0]["weight"], -8);
    assert_eq!(entries[1]["summands"][0]["status"], "NONZERO");
}

#[test]
fn profile_all_strata_keys() {
    let value = json_of(&["profile", "--lambda", r#"{"k1":[3],"k2":[1]}"#]);
    for key in ["siegel", "klingen", "cusp", "double"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn kostant_dump_has_16_summands_at_d2() {
    let value = json_of(&[
        "kostant",
        "--lambda",
        r#"{"k1":[3,3],"k2":[1,1]}"#,
        "--stratum",
        "klingen",
    ]);
    assert_eq!(value["summands"].as_array().unwrap().len(), 16);
}

#[test]
fn weyl_dump_shape() {
    let value = json_of(&["weyl-dump", "--d", "2", "--stratum", "siegel"]);
    let elements = value["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 16);
    let lengths: Vec<i64> = elements
        .iter()
        .map(|e| e["length"].as_i64().unwrap())
        .collect();
    assert_eq!(lengths.iter().filter(|&&l| l == 6).count(), 1);
    // identity element: empty inversion set, identity dot table
    assert_eq!(elements[0]["inversions"].as_array().unwrap().len(), 0);
    assert_eq!(
        elements[0]["dotAction"][0]["e1"],
        serde_json::json!([1, 0, 0])
    );
}

#[test]
fn sweep_cap_is_enforced() {
    let out = run(&["sweep", "--d", "3", "--k-max", "9", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn sweep_zero_weight_grid() {
    let value = json_of(&["sweep", "--d", "2", "--k-max", "0", "--format", "json"]);
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["k1"], serde_json::json!([0, 0]));
    assert_eq!(rows[0]["k2"], serde_json::json!([0, 0]));
    assert_eq!(rows[0]["corank"], 2);
    assert_eq!(rows[0]["weights01Present"], true);
}

#[test]
fn sweep_json_format() {
    let value = json_of(&["sweep", "--d", "1", "--k-max", "1", "--format", "json"]);
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["k1"], serde_json::json!([0]));
    assert_eq!(rows[2]["weights01Present"], true);
}
