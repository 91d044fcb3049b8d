//! End-to-end runs of the `cuntz-rep` binary.

use std::process::{Command, Output};

fn cuntz_rep(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cuntz-rep"));
    cmd.args(args).env_remove("CUNTZ_REP_DEPTH");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decompose_examples() {
    let o = cuntz_rep(&["decompose", "P(2;1 2)^3"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "P(8; 1 8) (+) P(8; 2 7) (+) P(8; 3 6) (+) P(8; 4 5)\n");
    let o = cuntz_rep(&["decompose", "P(4;1) o rho"], &[]);
    assert_eq!(stdout(&o), "P(4; 2 4)\n");
    let o = cuntz_rep(&["decompose", "P(4;1) o rhobar"], &[]);
    assert_eq!(stdout(&o), "P(4; 3 4)\n");
}

#[test]
fn json_is_stable_and_parses() {
    let a = cuntz_rep(&["--json", "decompose", "P(2;1 2) (x) P(2;1 2) (+) P(4;| 2)"], &[]);
    let b = cuntz_rep(&["--json", "decompose", "P(2;1 2) (x) P(2;1 2) (+) P(4;| 2)"], &[]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["alphabet"], 4);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    let d: cuntz_rep::repcalc::Decomposition = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(d.len(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(cuntz_rep(&["decompose", "P(2;1 3)"], &[]).status.code(), Some(2));
    assert_eq!(cuntz_rep(&["decompose", "P(2;1) (+) P(3;1)"], &[]).status.code(), Some(2));
    assert_eq!(cuntz_rep(&["frobnicate"], &[]).status.code(), Some(2));
    assert_eq!(cuntz_rep(&["--depth", "1", "decompose", "P(4;1) o rho"], &[]).status.code(), Some(3));
    let o = cuntz_rep(&["oracle-check", "P(2;1 2) (x) P(2;1 2)", "--depth", "6"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("MATCH\n"));
}

#[test]
fn depth_from_environment() {
    let o = cuntz_rep(&["decompose", "P(4;1) o rho"], &[("CUNTZ_REP_DEPTH", "1")]);
    assert_eq!(o.status.code(), Some(3));
    // the flag wins over the environment
    let o = cuntz_rep(&["--depth", "6", "decompose", "P(4;1) o rho"], &[("CUNTZ_REP_DEPTH", "1")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn equiv_and_irreducible() {
    assert_eq!(stdout(&cuntz_rep(&["equiv", "P(2;1) (x) P(2;2)", "P(4;2)"], &[])), "true\n");
    assert_eq!(stdout(&cuntz_rep(&["equiv", "P(4;1) o rho", "P(4;1) o rhobar"], &[])), "false\n");
    let o = cuntz_rep(&["irreducible", "P(2;1 2) (x) P(2;1 1)"], &[]);
    assert_eq!(stdout(&o), "P(4; 1 3) irreducible\n");
}

#[test]
fn dot_export() {
    let dir = std::env::temp_dir().join(format!("cuntz-rep-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let o = cuntz_rep(&["--dot", path.to_str().unwrap(), "--depth", "2", "decompose", "P(2;1 2)"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph bfs {"));
    assert!(dot.contains("[label=\"1\"]"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn endo_from_file() {
    let dir = std::env::temp_dir().join(format!("cuntz-rep-endo-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("psi12.json");
    let psi12 = cuntz_rep::endocalc::builtin("psi12").unwrap();
    std::fs::write(&path, serde_json::to_string(&psi12).unwrap()).unwrap();
    let expr = format!("P(2;1) o endo:{}", path.display());
    assert_eq!(stdout(&cuntz_rep(&["decompose", &expr], &[])), "P(2; 1 2)\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
