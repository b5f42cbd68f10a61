use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn indminor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indminor")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn classify_reports_verdicts() {
    let out = indminor(&["classify", "gem"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], "indminor/1");
    assert_eq!(r["results"][0]["verdict"]["gi"], "PolynomialTime");
    assert_eq!(r["results"][0]["verdict"]["cw"], "Bounded");
    let hard = json(&indminor(&["classify", "k3uk1"]));
    assert_eq!(hard["results"][0]["verdict"]["gi"], "GIComplete");
}

#[test]
fn iso_exit_codes() {
    assert_eq!(indminor(&["iso", "C5", "Dhc"]).status.code(), Some(0));
    let out = indminor(&["iso", "--algo", "gem", "C4", "P4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["results"][0]["isomorphic"], false);
    assert_eq!(indminor(&["iso", "C4", "not-a-graph!"]).status.code(), Some(2));
    assert_eq!(indminor(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn reduce_and_check() {
    let out = indminor(&["--oracle", "reduce", "K4", "--target", "split"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["results"][0]["certificate"]["valid"], true);
    assert_eq!(r["results"][0]["oracle_agrees"], true);
    let out = indminor(&["check", "C5", "--property", "p4-free"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cw_build_then_verify() {
    let r = json(&indminor(&["cw", "--build", "gemfree", "C6"]));
    let expr = r["results"][0]["expression"].as_str().expect("expression").to_owned();
    let out = indminor(&["cw", "--verify", &expr, "C6"]);
    assert_eq!(out.status.code(), Some(0));
    let out = indminor(&["cw", "--verify", &expr, "P6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn graphs_from_stdin() {
    let gen = indminor(&["--seed", "9", "gen", "--family", "cograph", "--n", "7", "--count", "3"]);
    assert_eq!(gen.status.code(), Some(0));
    let lines: Vec<String> = json(&gen)["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["graph6"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(lines.len(), 3);
    let mut child = Command::new(env!("CARGO_BIN_EXE_indminor"))
        .args(["check", "-", "--property", "p4-free"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(lines.join("\n").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"].as_array().unwrap().len(), 3);
}
