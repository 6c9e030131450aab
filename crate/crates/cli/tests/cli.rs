use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgperiod"))
        .args(args)
        .env_remove("PREC")
        .env_remove("TOL")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = run(&a);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_exceptional() {
    let o = run(&["classify", "--m", "12", "--tuple", "1,4,9,10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("Exceptional"));
    let (v, _) = json(&["classify", "--tuple", "1/6,1/3,2/3,5/6"]);
    assert_eq!(v["results"]["class"], "Type1");
    let (v, _) = json(&["classify", "--m", "7", "--tuple", "1,1,1,2"]);
    assert_eq!(v["results"]["class"], "NotHodge");
}

#[test]
fn verify_report_schema() {
    let (v, code) = json(&["verify", "--id", "G1-2m", "--alpha", "1/4"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "results", "residuals", "closed_form", "citations", "status"]);
    assert_eq!(v["status"], "PASS");
    let res = v["residuals"].as_array().unwrap();
    assert_eq!(res.len(), 6);
    assert!(res.iter().all(|r| r["relative"].as_f64().unwrap() < 1e-8));
    assert!(v["closed_form"].as_str().unwrap().starts_with("F = "));
}

#[test]
fn residual_breach_fails_with_exit_2() {
    // f64 routes cannot agree to 1e-20.
    let (v, code) = json(&["verify", "--id", "G1-2m", "--alpha", "1/4", "--tolerance", "1e-20"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "FAIL");
    let o = run(&["verify", "--id", "G1-2m", "--alpha", "1/4", "--tolerance", "1e-20"]);
    assert!(stdout(&o).trim_end().ends_with("status: FAIL"));
}

#[test]
fn seeded_output_is_byte_identical() {
    let args = ["verify", "--id", "G3-4m", "--seed", "11", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["inputs"]["seed"], 11);
    let c = run(&["verify", "--id", "G3-4m", "--seed", "12", "--format", "json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn empty_orbit_report() {
    let (v, code) = json(&["orbits", "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["orbits"], Value::Array(vec![]));
    assert_eq!(v["results"]["e_m"], 0);
    assert_eq!(v["results"]["o_m"], 0);
    let (v, _) = json(&["orbits", "--m", "30"]);
    assert_eq!((v["results"]["e_m"].as_u64(), v["results"]["o_m"].as_u64()), (Some(98), Some(15)));
}

#[test]
fn closed_form_value() {
    let (v, code) = json(&["closed-form", "--id", "G1-2m", "--alpha", "1/4", "--precision", "40"]);
    assert_eq!(code, 0);
    let x: f64 = v["results"]["value"].as_str().unwrap().parse().unwrap();
    let want = 1.5 * std::f64::consts::SQRT_2 * (1.0 + std::f64::consts::SQRT_2).ln();
    assert!((x - want).abs() < 1e-14);
    assert!(v["results"]["value"].as_str().unwrap().starts_with("1.869675720420691540182060240"));
    assert!(v["citations"].as_array().unwrap().iter().any(|c| c.as_str().unwrap().contains("corrected")));
}

#[test]
fn eval_and_env_overrides() {
    let o = Command::new(env!("CARGO_BIN_EXE_hgperiod"))
        .args(["eval-f32", "--tuple", "1,2,2", "--format", "json"])
        .env("PREC", "40")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["inputs"]["precision"], 40);
    assert!(v["results"]["value"].as_str().unwrap().starts_with("1.644934066848226436472415166646025189"));
}

#[test]
fn appendix_single_entry() {
    let o = run(&["appendix-check", "--m", "120"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1 m values matched"));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["verify", "--id", "nope", "--alpha", "1/4"][..],
        &["verify", "--id", "G1-2m", "--alpha", "1/4", "--precision", "10"],
        &["verify", "--id", "G1-2m", "--alpha", "x/y"],
        &["verify", "--id", "G1-m", "--alpha", "1/4"],
        &["verify", "--id", "G2-3m", "--alpha", "0"],
        &["eval-f32", "--tuple", "1,1,1"],
        &["classify", "--m", "12", "--tuple", "1,4,9"],
        &["appendix-check"],
        &["appendix-check", "--m", "13"],
        &["no-such-command"],
        &[],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
}
