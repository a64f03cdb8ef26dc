use std::process::{Command, Output};

use catsl11::report::Report;

fn run(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_catsl11"));
    cmd.args(args).env_remove("CAT_SL11_MAX_N");
    if let Some(c) = cap {
        cmd.env("CAT_SL11_MAX_N", c);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Report {
    Report::from_json(&String::from_utf8_lossy(&out.stdout)).expect("json report")
}

#[test]
fn hopf_passes() {
    let out = run(&["check", "hopf"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[PASS]") && !text.contains("[FAIL]"), "{text}");
}

#[test]
fn decat_json_round_trip() {
    let out = run(&["--format", "json", "--seed", "5", "check", "decat", "--n", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r.pass());
    assert_eq!((r.config.n, r.config.seed), (2, 5));
    assert!(r.cases.len() >= 16 + 4 + 16);
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check", "bimodule", "--which", "Q"], None).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["check", "rep", "--n", "0"], None).status.code(), Some(2));
    assert_eq!(run(&["check", "rook", "--n", "9"], None).status.code(), Some(2));
}

#[test]
fn env_cap_is_enforced() {
    assert_eq!(run(&["check", "rep", "--n", "3"], Some("2")).status.code(), Some(2));
    assert_eq!(run(&["check", "rep"], Some("x")).status.code(), Some(2));
    let out = run(&["--format", "json", "check", "rep"], Some("2"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out).config.n, 2);
}

#[test]
fn unbuildable_structure_is_a_failed_check() {
    // A⊠R_5 is past the basis limit
    let out = run(&["--format", "json", "check", "bimodule", "--which", "Cn", "--n", "5"], None);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r.cases.len(), 1);
    assert!(!r.cases[0].pass && r.cases[0].witness.is_some());
}

#[test]
fn dims_and_out_file() {
    let out = run(&["dims", "--which", "A"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("dimension 7"));
    let path = std::env::temp_dir().join(format!("catsl11-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["--format", "json", "--out", p, "check", "hopf"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(r.pass());
    std::fs::remove_file(&path).unwrap();
}
