use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn qsnake(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsnake")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const GOLDEN: &str = "X^(1,-2,0,0) + (q^-1/2 + q^1/2)·X^(-1,0,1,1) + (q^-1/2 + q^1/2)·X^(-1,-2,0,1) + X^(-3,4,3,2) \
+ (q^-1 + 1 + q)·X^(-3,2,2,2) + (q^-1 + 1 + q)·X^(-3,0,1,2) + X^(-3,-2,0,2)\n";

#[test]
fn golden_quantum_expansion() {
    let o = qsnake(&[
        "expand",
        "--surface",
        &data("annulus.json"),
        "--arc",
        &data("annulus_arc.json"),
        "--seed",
        &data("annulus_seed.json"),
        "--quantum",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), GOLDEN);
}

#[test]
fn default_seed_is_principal() {
    let o = qsnake(&["expand", "--surface", &data("annulus.json"), "--arc", &data("annulus_arc.json"), "--quantum"]);
    assert_eq!(stdout(&o), GOLDEN);
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "expand",
        "--surface",
        &data("annulus.json"),
        "--arc",
        &data("annulus_arc.json"),
        "--quantum",
        "--audit",
        "--machine",
    ];
    let first = qsnake(&args).stdout;
    assert!(!first.is_empty());
    for _ in 0..3 {
        assert_eq!(qsnake(&args).stdout, first);
    }
}

#[test]
fn arc_of_the_triangulation_is_a_single_variable() {
    let o =
        qsnake(&["expand", "--surface", &data("pentagon.json"), "--arc", r#"{"crossings":[],"arc":1}"#, "--quantum"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X^(0,1,0,0)\n");
}

#[test]
fn matchings_are_listed_once_each() {
    let one = qsnake(&[
        "matchings",
        "--surface",
        &data("pentagon.json"),
        "--arc",
        r#"{"crossings":[0],"start_triangle":0,"end_triangle":1}"#,
        "--machine",
    ]);
    assert_eq!(stdout(&one).lines().count(), 2);
    let golden =
        qsnake(&["matchings", "--surface", &data("annulus.json"), "--arc", &data("annulus_arc.json"), "--machine"]);
    assert_eq!(stdout(&golden).lines().count(), 13);
}

#[test]
fn verify_succeeds_on_pentagon_and_annulus() {
    let o =
        qsnake(&["verify", "--surface", &data("pentagon.json"), "--arc", &data("pentagon_arc.json"), "--flips", "0,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("ok "));
    let o =
        qsnake(&["verify", "--surface", &data("annulus.json"), "--arc", &data("annulus_arc.json"), "--flips", "0,1,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_reports_mismatch() {
    let o =
        qsnake(&["verify", "--surface", &data("pentagon.json"), "--arc", &data("pentagon_arc.json"), "--flips", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("mismatch"));
}

#[test]
fn malformed_inputs_exit_with_two() {
    let bad_surface = qsnake(&["expand", "--surface", r#"{"n_internal":1}"#, "--arc", &data("annulus_arc.json")]);
    assert_eq!(bad_surface.status.code(), Some(2));
    assert!(!bad_surface.stderr.is_empty());
    let bad_lambda = r#"{"Btilde":[[0,-2],[2,0],[1,0],[0,1]],"Lambda":[[0,0,-1,0],[0,0,0,-1],[1,0,0,-2],[0,1,2,0]]}"#;
    let o = qsnake(&[
        "expand",
        "--surface",
        &data("annulus.json"),
        "--arc",
        &data("annulus_arc.json"),
        "--seed",
        bad_lambda,
        "--quantum",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = qsnake(&[
        "expand",
        "--surface",
        &data("annulus.json"),
        "--arc",
        r#"{"crossings":[0,0],"start_triangle":0,"end_triangle":1}"#,
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = qsnake(&["expand", "--surface", &data("missing.json"), "--arc", &data("annulus_arc.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(qsnake(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn flip_prints_surface_json() {
    let o = qsnake(&["flip", "--surface", &data("annulus.json"), "--tau", "0", "--machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["n_internal"], 2);
}

#[test]
fn check_seed_reports_scalar() {
    let o = qsnake(&["check-seed", "--seed", &data("annulus_seed.json"), "--surface", &data("annulus.json")]);
    assert_eq!(stdout(&o), "d = 1\n");
}
