mod common;

use std::process::{Command, Output};

use common::algebras_dir;

fn permalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permalg")).args(args).env_remove("PERMALG_OUTPUT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn algebra(name: &str) -> String {
    algebras_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn is_lie_reports_combination_and_negative() {
    let yes = permalg(&["is-lie", "x2x1x3 - x1x2x3"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes), "Lie element: [[x2,x1],x3]\n");
    let no = permalg(&["is-lie", "x1x2"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("not a Lie element"));
}

#[test]
fn syntax_errors_exit_with_two() {
    let o = permalg(&["normalize", "x1 +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let j = permalg(&["--json", "normalize", "x1 +"]);
    assert_eq!(j.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert!(v["error"].as_str().unwrap().contains("syntax"));
    assert_eq!(permalg(&["envelope", "check", "--algebra", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(permalg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_permalg"))
        .args(["is-lie", "x2x1x3 - x1x2x3"])
        .env("PERMALG_OUTPUT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_lie"], true);
    assert_eq!(v["combination"], "[[x2,x1],x3]");
}

#[test]
fn jordan_express_negative_in_degree_two() {
    let o = permalg(&["--json", "jordan-express", "x1x2"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_jordan"], false);
    assert_eq!(permalg(&["jordan-express", "x1x2 + x2x1"]).status.code(), Some(0));
}

#[test]
fn heisenberg_normal_form() {
    let heis = algebra("heisenberg.json");
    let o = permalg(&["envelope", "nf", "--algebra", &heis, "d(e2)*e1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "d(e1)*e2 - d(e3)");
    let u = permalg(&["--unicode", "envelope", "nf", "--algebra", &heis, "--strategy", "rightmost", "d(e2)*e1"]);
    assert_eq!(stdout(&u).trim(), "e\u{307}1e2 - e\u{307}3");
}

#[test]
fn envelope_check_accepts_valid_and_rejects_invalid() {
    assert_eq!(permalg(&["envelope", "check", "--algebra", &algebra("filiform4.json")]).status.code(), Some(0));
    let bad = permalg(&["envelope", "check", "--algebra", &algebra("sl2.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("metabelian identity fails"));
}

#[test]
fn dimensions_and_cohn_witness() {
    assert_eq!(stdout(&permalg(&["dims", "--gens", "3", "--deg", "4"])).trim(), "dim P_4(3 generators) = 30");
    let o = permalg(&["--json", "cohn-witness"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["i_slice_dim"], 1);
    assert_eq!(v["j_slice_dim"], 2);
    assert_eq!(v["exceptional"], true);
}

#[test]
fn growth_estimate_for_heisenberg() {
    let o = permalg(&["--json", "gk", "--algebra", &algebra("heisenberg.json"), "--max-deg", "12"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["slope"].as_f64().unwrap() - 2.0).abs() < 0.25);
    assert_eq!(v["counts"][0], 3);
}

#[test]
fn identities_all_hold() {
    let o = permalg(&["identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}
