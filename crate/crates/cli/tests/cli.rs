use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn nlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlab")).args(args).env_remove("NLAB_CACHE").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn star_of_the_loop_necklace() {
    let o = nlab(&["algebra", "star", "-q", &data("quivers/loop.json"), "-l", "(e e*)", "-r", "(e e*)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(e e*)&(e e*) - 1/4 h^2 I(v)&I(v)");
}

#[test]
fn hopf_suite_passes() {
    let o = nlab(&["verify", "hopf", "-q", &data("quivers/loop.json"), "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS antipode-involution"));
}

#[test]
fn torus_enumeration_lists_the_two_loop_vertex() {
    let o = nlab(&["ribbon", "enum", "--genus", "1", "--faces", "1", "--min-valence", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("2 edges: 1 classes, 0 orientable"), "{out}");
    assert!(out.contains("(0 2 1 3)  nonorientable"), "{out}");
}

#[test]
fn homology_is_tab_separated() {
    let o = nlab(&["ribbon", "homology", "--genus", "0", "--faces", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "degree\tdim\tbetti\n2\t1\t0\n3\t2\t1\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nlab(&["bogus"]).status.code(), Some(2));
    let o = nlab(&["algebra", "star", "-q", &data("quivers/loop.json"), "-l", "(e e*", "-r", "(e)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    assert_eq!(nlab(&["ribbon", "enum", "--genus", "0", "--faces", "2"]).status.code(), Some(2));
    assert_eq!(nlab(&["algebra", "star", "-l", "(e)", "-r", "(e)"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_one() {
    let o = nlab(&["ainf", "check", "--data", &data("ainf/nonassociative.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL ainf-relations"));
    assert_eq!(nlab(&["ainf", "check", "--data", &data("ainf/super-matrix-category.json")]).status.code(), Some(0));
}

#[test]
fn cycles_have_zero_boundary() {
    let o = nlab(&["ainf", "cycle", "--data", &data("ainf/ground-field.json"), "--genus", "0", "--faces", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("boundary in degree 2: zero"));
    let o = nlab(&["ainf", "cycle", "--data", &data("ainf/matrix-category.json"), "--genus", "0", "--faces", "3"]);
    assert_eq!(o.status.code(), Some(2), "several objects need labels");
}

#[test]
fn cochain_on_the_theta_graph() {
    let q = data("quivers/loop.json");
    let o = nlab(&["ribbon", "cochain", "-q", &q, "--graph", "(0 2 4)(1 3 5)", "-l", "(e e e)", "-l", "(e* e* e*)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
    let o = nlab(&["ribbon", "cochain", "-q", &q, "--graph", "(0 2 4)(1 3 5)", "-l", "(e e e)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_reproducible() {
    let args = ["verify", "lie", "-q", &data("quivers/two-loop.json"), "--max-len", "2", "--random", "20", "--seed", "7"];
    let a = nlab(&args);
    let mut with_jobs = args.to_vec();
    with_jobs.extend(["--jobs", "2"]);
    let b = nlab(&with_jobs);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("rng ChaCha8 seed 7"));
}

#[test]
fn json_reports_parse() {
    let o = nlab(&["verify", "polygon", "--max-edges", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json");
    assert_eq!(v[0]["suite"], "polygon-homology");
    assert!(v[0]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn single_cases_rerun() {
    let q = data("quivers/loop.json");
    let o = nlab(&["verify", "hopf", "-q", &q, "--case", "(e e*)", "--case", "(e e e*)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS bialgebra (1 cases)"));
    let o = nlab(&["verify", "lie", "-q", &q, "--case", "(e e*)", "--case", "(e e e*)", "--case", "(e*)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS jacobi (1 cases)"));
    let o = nlab(&["verify", "diagram", "-q", &q, "--dims", "2", "-l", "(e e*)", "-r", "(e e*)"]);
    assert_eq!(o.status.code(), Some(0));
}
