use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn qcanon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcanon")).args(args).env_remove("QCANON_CACHE_DIR").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_element(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn mul_reorders_with_q_power() {
    let (a, b) = (data("x12.json"), data("x11.json"));
    let out = qcanon(&["mul", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(stdout(&out), golden("mul_x12_x11.json"));
    let out = qcanon(&["mul", a.to_str().unwrap(), b.to_str().unwrap(), "--format", "text"]);
    assert_eq!(stdout(&out), "(q^-2) x[1,1] x[1,2]\n");
}

#[test]
fn mul_by_unit_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let one = write_element(&dir, "one.json", r#"{"n":2,"basis":"plain","terms":[{"matrix":[[0,0],[0,0]],"coeff":[[0,"1"]]}]}"#);
    let x = data("x12.json");
    let out = json(&qcanon(&["mul", &one, x.to_str().unwrap()]));
    let expected: Value = serde_json::from_str(&std::fs::read_to_string(&x).unwrap()).unwrap();
    assert_eq!(out, expected);
}

#[test]
fn mul_det_squared_has_degree_four() {
    let dir = tempfile::tempdir().unwrap();
    let det = write_element(
        &dir,
        "det.json",
        r#"{"n":2,"basis":"plain","terms":[
            {"matrix":[[1,0],[0,1]],"coeff":[[0,"1"]]},
            {"matrix":[[0,1],[1,0]],"coeff":[[2,"-1"]]}]}"#,
    );
    let out = json(&qcanon(&["mul", &det, &det]));
    let terms = out["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    for t in terms {
        let deg: u64 = t["matrix"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).map(|x| x.as_u64().unwrap()).sum();
        assert_eq!(deg, 4);
    }
    // det_q^2 is the single canonical element b(2 Id).
    let out = json(&qcanon(&["mul", &det, &det, "--basis", "canonical"]));
    assert_eq!(out["terms"].as_array().unwrap().len(), 1);
    assert_eq!(out["terms"][0]["matrix"], serde_json::json!([[2, 0], [0, 2]]));
}

#[test]
fn canonical_blocks() {
    assert_eq!(stdout(&qcanon(&["canonical", "--n", "2", "--ro", "1,1", "--co", "1,1"])), golden("canonical_n2_11_11.json"));
    let unit = json(&qcanon(&["canonical", "--n", "2", "--ro", "0,0", "--co", "0,0"]));
    assert_eq!(unit["elements"].as_array().unwrap().len(), 1);
    let block = json(&qcanon(&["canonical", "--n", "3", "--ro", "1,1,1", "--co", "1,1,1"]));
    let elements = block["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 6);
    let det = elements.iter().find(|e| e["top"] == serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap();
    assert_eq!(det["coeffs"].as_array().unwrap().len(), 6);
}

#[test]
fn canonical_rejects_inconsistent_sums() {
    let out = qcanon(&["canonical", "--n", "2", "--ro", "1,1", "--co", "2,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("different totals"));
}

#[test]
fn max_block_size_guard() {
    let out = qcanon(&["canonical", "--n", "3", "--ro", "2,2,2", "--co", "2,2,2", "--max-block-size", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the limit"));
}

#[test]
fn minor_is_a_canonical_element() {
    let out = qcanon(&["minor", "--n", "3", "--rows", "1,2", "--cols", "1,3"]);
    assert_eq!(stdout(&out), golden("minor_n3_12_13.json"));
}

#[test]
fn act_and_kashiwara() {
    let out = qcanon(&["act", "--b", "[[1,0],[0,0]]", "--side", "R", "--generator", "F1", "--format", "text"]);
    assert_eq!(stdout(&out), "x[1,2]\n");
    let out = qcanon(&["act", "--b", "[[1,0],[0,0]]", "--side", "L", "--generator", "E3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = json(&qcanon(&["kashiwara", "--b", "[[0,0],[1,0]]", "--index", "1", "--op", "raise"]));
    assert_eq!(out["leading_term"]["holds"], serde_json::json!([[1, 0], [0, 0]]));
    let out = json(&qcanon(&["kashiwara", "--b", "[[0,1],[0,0]]", "--index", "1", "--op", "raise"]));
    assert_eq!(out["leading_term"], "not applicable");
}

#[test]
fn invariants_under_everything_are_constants() {
    let out = json(&qcanon(&["invariants", "--n", "3", "-S", "all", "--truncation", "0"]));
    assert_eq!(out["blocks"].as_array().unwrap().len(), 1);
    assert_eq!(out["checks"]["string_property"], "pass");
    let out = json(&qcanon(&["invariants", "--n", "3", "-S", "all", "--truncation", "3"]));
    let members: usize = out["blocks"].as_array().unwrap().iter().map(|b| b["members"].as_array().unwrap().len()).sum();
    assert_eq!(members, 2);
    let out = json(&qcanon(&["invariants", "--n", "3", "-S", "all", "--truncation", "3", "--reduced"]));
    assert_eq!(out["blocks"].as_array().unwrap().len(), 1);
}

#[test]
fn module_of_natural_weight() {
    assert_eq!(stdout(&qcanon(&["module", "--n", "2", "--lambda", "1"])), golden("module_n2_l1.json"));
    let out = json(&qcanon(&["module", "--n", "3", "--lambda", "1,0"]));
    assert_eq!(out["dimension"], 3);
    assert_eq!(out["actions"].as_array().unwrap().len(), 8);
    let out = qcanon(&["module", "--n", "3", "--lambda", "-1,0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_positivity_passes() {
    let out = qcanon(&["verify", "--suite", "positivity", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["reports"][0]["seed"], 42);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_timeout_reports_partial_results() {
    let out = qcanon(&["verify", "--timeout", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["skipped"].as_array().unwrap().len(), 12);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(qcanon(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(qcanon(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qcanon(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_point_at_the_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_element(&dir, "bad.json", "{\"n\":2,\"basis\":\"plain\",\n\"terms\":[{\"matrix\":[[0,1],[0]],\"coeff\":[[0,\"1\"]]}]}");
    let out = qcanon(&["bar", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2 column"), "{err}");
    let syntax = write_element(&dir, "syntax.json", "{\"n\":2,\n\"basis\": plain}");
    let err = String::from_utf8_lossy(&qcanon(&["bar", &syntax]).stderr).to_string();
    assert!(err.contains("line 2 column"), "{err}");
}

#[test]
fn identical_jobs_give_identical_bytes() {
    for args in [
        &["invariants", "--n", "3", "-S", "lowering", "--truncation", "3", "--seed", "5"][..],
        &["verify", "--suite", "relations", "--seed", "9"],
        &["module", "--n", "3", "--lambda", "1,1"],
    ] {
        let a = qcanon(args);
        let b = qcanon(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qcanon"))
            .args(["canonical", "--n", "3", "--ro", "1,1,1", "--co", "1,1,1"])
            .env("QCANON_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, qcanon(&["canonical", "--n", "3", "--ro", "1,1,1", "--co", "1,1,1"]).stdout);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = qcanon(&["minor", "--n", "3", "--rows", "1,2", "--cols", "1,3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(path).unwrap(), golden("minor_n3_12_13.json"));
}
