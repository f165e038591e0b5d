use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_profit-kernel"))
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn flow_json(pairs: &[(f64, f64)]) -> String {
    let txs: Vec<String> = pairs
        .iter()
        .map(|(t, a)| format!(r#"{{"t":{t},"amount":{a}}}"#))
        .collect();
    format!(r#"{{"transactions":[{}]}}"#, txs.join(","))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        let dir = TempDir::new().unwrap();
        let d = dir.path();
        write(d, "x.json", &flow_json(&[(0.0, 1.0), (1.0, -2.0), (2.0, 1.1)]));
        write(d, "y.json", &flow_json(&[(0.0, -1.0), (1.0, 2.0), (2.0, -0.7)]));
        write(d, "z.csv", "t,amount\n0,-1\n1,2.7\n2,-1.8\n");
        write(d, "loan.json", &flow_json(&[(0.0, -1.0), (1.0, 1.5)]));
        write(
            d,
            "e.json",
            r#"{"kind":"d_family_range","family":{"kind":"exponential_family"},"lambda":[0,null]}"#,
        );
        Fixture { dir }
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).display().to_string()
    }
}

#[test]
fn irr_of_the_middle_project() {
    let f = Fixture::new();
    let v = json(&["irr", "--family", "exponential_family", "--input", &f.path("y.json")]);
    assert!((v["irr"].as_f64().unwrap() - 0.4368).abs() < 5e-4);
    assert_eq!(v["natural_domain"], Value::from(true));
    assert_eq!(v["regular"], Value::from(true));
}

#[test]
fn natural_extension_outside_domain_exits_2() {
    let f = Fixture::new();
    let out = run(&["irr", "--input", &f.path("z.csv"), "--extended"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&["irr", "--input", &f.path("x.json"), "--extended"]);
    assert_eq!(v["natural_extension"], Value::from("+inf"));
}

#[test]
fn compare_reports_strict_order() {
    let f = Fixture::new();
    let v = json(&["compare", "--scenario", &f.path("e.json"), "--inputs", &f.path("x.json"), &f.path("y.json")]);
    assert_eq!(v["relation"], Value::from("greater_strict"));
    assert!(v["accepts_x_only"].is_string());
    let v = json(&["compare", "--scenario", &f.path("e.json"), "--inputs", &f.path("y.json"), &f.path("z.csv")]);
    assert_eq!(v["relation"], Value::from("greater_strict"));
}

#[test]
fn incomparability_is_a_result() {
    let f = Fixture::new();
    let neg = write(f.dir.path(), "neg.json", &flow_json(&[(0.0, 1.0), (1.0, -2.0), (2.0, 0.7)]));
    let v = json(&[
        "compare",
        "--scenario",
        &f.path("e.json"),
        "--inputs",
        &f.path("y.json"),
        neg.to_str().unwrap(),
    ]);
    assert_eq!(v["relation"], Value::from("incomparable"));
}

#[test]
fn usury_of_a_cheap_loan() {
    let f = Fixture::new();
    let v = json(&["usury", "--input", &f.path("loan.json")]);
    assert_eq!(v["classification"], Value::from("non_usurious"));
}

#[test]
fn payback_variants() {
    let f = Fixture::new();
    let p = write(f.dir.path(), "p.json", &flow_json(&[(0.0, -1.0), (1.0, 0.6), (2.0, 0.6)]));
    let p = p.to_str().unwrap();
    let v = json(&["dpp", "--input", p, "--refined", "--star", "--classify", "--extended"]);
    assert_eq!(v["dpp"], Value::from(2.0));
    assert!((v["dpp_star"].as_f64().unwrap() - 5.0 / 3.0).abs() < 1e-12);
    assert_eq!(v["domain_class"], Value::from("q_possesses"));
    assert_eq!(v["reciprocal_extension"], Value::from(0.5));
    assert_eq!(json(&["pp", "--input", p])["pp"], Value::from(2.0));
}

#[test]
fn indices() {
    let f = Fixture::new();
    let p = write(f.dir.path(), "p.json", &flow_json(&[(0.0, -1.0), (1.0, 3.0)]));
    let p = p.to_str().unwrap();
    assert_eq!(json(&["pi", "--input", p])["pi"], Value::from(3.0));
    let v = json(&["ri", "--input", p, "--extended", "--grid", "0,1,2,5"]);
    assert_eq!(v["ri"], Value::from(3.0));
    assert_eq!(v["natural_extension"], Value::from(3.0));
}

#[test]
fn report_covers_every_section() {
    let f = Fixture::new();
    let v = json(&["report", "--input", &f.path("z.csv")]);
    for key in ["sets", "npv", "irr", "irr_natural_extension", "payback", "pi", "ratio_index", "usury"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["irr_natural_extension"]["outside_domain"], Value::from(true));
}

#[test]
fn json_output_is_deterministic() {
    let f = Fixture::new();
    let args = ["report", "--input", &f.path("y.json"), "--format", "json"];
    let a = run(&args).stdout;
    let b = bin().args(args).env("PROFIT_KERNEL_THREADS", "1").output().unwrap().stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn malformed_input_exits_1() {
    let f = Fixture::new();
    let bad = write(f.dir.path(), "bad.csv", "t,amount\n0,-1\n1,oops\n");
    let out = run(&["npv", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let neg = write(f.dir.path(), "neg.csv", "t,amount\n-1,2\n");
    assert_eq!(run(&["npv", "--input", neg.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["npv", "--input", "/nonexistent.json"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn csv_and_json_inputs_agree() {
    let f = Fixture::new();
    let c = write(f.dir.path(), "d.csv", "t,amount\n0,-1\n1,2\n1,1\n1,-1\n");
    let j = write(f.dir.path(), "d.json", &flow_json(&[(0.0, -1.0), (1.0, 2.0)]));
    let a = json(&["npv", "--alpha", "exp:0.1", "--input", c.to_str().unwrap()]);
    let b = json(&["npv", "--alpha", "exp:0.1", "--input", j.to_str().unwrap()]);
    assert_eq!(a, b);
}

#[test]
fn table_output() {
    let f = Fixture::new();
    let out = run(&["usury", "--input", &f.path("loan.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("classification") && l.ends_with("non_usurious")));
}
