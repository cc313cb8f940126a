//! End-to-end runs of the `novikov` binary on the bundled fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use novikov_cli::doc::{Document, Reader};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_novikov")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn a3_is_apn() {
    let (code, v) = run_json(&["verify", "apn", &path("a3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["failed"], serde_json::json!([]));
}

#[test]
fn one_dimensional_failure_names_the_identity() {
    let (code, v) = run_json(&["verify", "apn", &path("onedim_p1_q1.json")]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = v["failed"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert!(failed.contains(&"Aa3"));
    let w = v["witnesses"].as_array().unwrap().iter().find(|w| w["id"] == "Aa3").unwrap();
    assert_eq!(w["indices"], serde_json::json!([0, 0, 0]));
    assert_eq!(w["residual"], serde_json::json!(["3"]));
}

#[test]
fn parametric_one_dimensional_family() {
    let p = path("onedim.json");
    let (code, _) = run_json(&["verify", "apn", &p, "--param", "p=0", "--param", "q=0"]);
    assert_eq!(code, 0);
    let (code, _) = run_json(&["verify", "apn", &p, "--param", "p=1", "--param", "q=1"]);
    assert_eq!(code, 1);
}

#[test]
fn canonical_tensor_of_double() {
    let (code, v) = run_json(&["ybe", "check", &path("double.json"), "--s", "canonical"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["properties"]["factorizable"], true);
}

#[test]
fn worked_bialgebra_verifies() {
    let (code, v) = run_json(&["verify", "bialgebra", &path("worked_bialgebra.json")]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "apn", "/nonexistent/file.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.json", "{ not json");
    assert_eq!(run(&["verify", "apn", &bad]).status.code(), Some(2));
}

#[test]
fn fractions_over_prime_fields_need_coercion() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(
        &dir,
        "third.json",
        r#"{"field": {"kind": "gf", "p": 5}, "dim": 1, "ops": {"succ": [[0, 0, 0, "1/3"]], "prec": []}}"#,
    );
    let out = run(&["verify", "apn", &p]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["verify", "apn", &p, "--coerce"]);
    assert_ne!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn empty_ops_is_the_zero_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "zero.json", r#"{"field": {"kind": "rational"}, "dim": 2, "ops": {"succ": [], "prec": []}}"#);
    let (code, v) = run_json(&["verify", "apn", &p]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let doc = Document::load(std::path::Path::new(&p)).unwrap();
    let b = Reader::new(&doc, &[], false).unwrap().apn().unwrap();
    assert!(b.succ.is_zero() && b.prec.is_zero());
}

#[test]
fn n2_fixture_has_two_constants() {
    let doc = Document::load(&fixture("n2.json")).unwrap();
    let n = Reader::new(&doc, &[], false).unwrap().novikov().unwrap();
    assert_eq!(n.circ.nonzero_entries().len(), 2);
    let (code, _) = run_json(&["verify", "novikov", &path("n2.json")]);
    assert_eq!(code, 0);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["search", "apn", "--field", "gf:3", "--dim", "1"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(run(&args).stdout, first.stdout);
    let seq = run(&["search", "apn", "--field", "gf:3", "--dim", "1", "--workers", "1"]);
    assert_eq!(seq.stdout, first.stdout);
}

#[test]
fn json_out_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.json");
    let out = run(&["verify", "apn", &path("a3.json"), "--json-out", out_path.to_str().unwrap()]);
    assert_eq!(std::fs::read(&out_path).unwrap(), out.stdout);
}

#[test]
fn documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a3.json", "a2.json", "n2.json", "double.json", "worked_bialgebra.json"] {
        let doc = Document::load(&fixture(name)).unwrap();
        let p = dir.path().join(name);
        doc.save(&p).unwrap();
        let again = Document::load(&p).unwrap();
        assert_eq!(again.to_json(), doc.to_json(), "{name}");
    }
}

#[test]
fn built_structures_are_loadable() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["build", "semidirect", &path("a2.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let p = write_temp(&dir, "hat.json", std::str::from_utf8(&out.stdout).unwrap());
    let (code, _) = run_json(&["verify", "apn", &p]);
    assert_eq!(code, 0);
}

#[test]
fn rota_baxter_correspondence_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["verify", "rb", &path("double_rb.json")]).status.code(), Some(0));
    let out = run(&["correspond", "rb-to-bialgebra", &path("double_rb.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let p = write_temp(&dir, "bi.json", std::str::from_utf8(&out.stdout).unwrap());
    let (code, _) = run_json(&["ybe", "check", &p]);
    assert_eq!(code, 0);
    assert_eq!(run(&["correspond", "bialgebra-to-rb", &p]).status.code(), Some(0));
    // Weight zero has no correspondence.
    assert_eq!(run(&["correspond", "rb-to-bialgebra", &path("double_rb.json"), "--weight", "0"]).status.code(), Some(2));
}
