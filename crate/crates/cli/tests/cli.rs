use std::fs;
use std::process::{Command, Output};

use qlink_core::cert::pipeline;
use qlink_core::ore::parse_operator;

fn qlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlink")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eval_prints_values() {
    let o = qlink(&["eval", "--link", "hopf", "--m", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "s^5+s^3+s+s^-1+s^-3+s^-5");

    let o = qlink(&["eval", "--link", "whitehead", "--m", "1", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn eval_json() {
    let o = qlink(&["--format", "json", "eval", "--link", "hopf", "--m", "1", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["num"], "s+s^-1");
    assert_eq!(v["den"], "1");
}

#[test]
fn eval_rejects_bad_colors() {
    let o = qlink(&["eval", "--link", "hopf", "--m", "0", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("colors must be ≥ 1"));
    let o = qlink(&["eval", "--link", "trefoil", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn show_operators() {
    let o = qlink(&["show", "--name", "A_sm_H"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Em^2 + (-Qn - Qn^-1)*Em + 1");

    let o = qlink(&["show", "--name", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));

    let o = qlink(&["show"]);
    let listed = stdout(&o);
    assert!(listed.lines().any(|l| l == "Abi_W"));
    assert!(listed.lines().any(|l| l == "delta5"));

    let o = qlink(&["--format", "json", "show", "--name", "Abi_W"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["name"], "Abi_W");
    assert_eq!(v["fingerprint"].as_str().unwrap().len(), 64);
}

#[test]
fn verify_hopf_suite() {
    let o = qlink(&["verify", "--suite", "hopf"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("11 checks, 0 failed"));

    let o = qlink(&["--format", "json", "verify", "--suite", "hopf", "--grid", "4x4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 11);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    assert_eq!(reports[0]["grid"], serde_json::json!([4, 4]));
}

#[test]
fn verify_rejects_bad_arguments() {
    assert_eq!(qlink(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(qlink(&["verify", "--grid", "0x3"]).status.code(), Some(2));
    assert_eq!(qlink(&["verify", "--grid", "abc"]).status.code(), Some(2));
}

#[test]
fn verify_reports_known_failures() {
    let o = qlink(&["verify", "--suite", "rmatrix"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("fail E R+/R+ matches the displayed closed form"));
    assert!(text.contains("pass E R+/R+ matches the expanded ratio"));
    assert!(text.contains("5 checks, 1 failed"));
}

#[test]
fn reduce_emits_parseable_operators() {
    let dir = std::env::temp_dir().join(format!("qlink-emit-{}", std::process::id()));
    let o = qlink(&["reduce", "--emit", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    for k in 1..=5 {
        assert!(text.contains(&format!("deg(eps_s delta{k}; En) = {k}")), "{}", text);
    }
    assert!(text.contains("proportional to (En+1)(En-Qn^2) Alk_n_W: true"));

    let written = fs::read_to_string(dir.join("delta5.txt")).unwrap();
    let parsed = parse_operator(written.trim()).unwrap();
    assert_eq!(parsed, pipeline().unwrap().delta(5));
    for name in ["F1", "tc4", "tdel4", "annwrel_tc1", "annwrel_remainder"] {
        assert!(dir.join(format!("{}.txt", name)).exists(), "{}", name);
    }
    assert_eq!(fs::read_to_string(dir.join("annwrel_remainder.txt")).unwrap().trim(), "0");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let a = qlink(&["--format", "json", "show", "--name", "Y"]);
    let b = qlink(&["--format", "json", "show", "--name", "Y"]);
    assert_eq!(a.stdout, b.stdout);
}
