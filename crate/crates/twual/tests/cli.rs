//! End-to-end checks of the command-line surface.

use std::process::Command;

fn twual(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_twual"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).trim().to_string(),
        String::from_utf8_lossy(&out.stderr).trim().to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn apply_with_gamma_list() {
    let (stdout, _, code) = twual(&["apply", "[1,2,3,1,2,3]", "--gamma", "tdt,td,d"]);
    assert_eq!(code, 0);
    let (check, _, _) = twual(&["iso", &stdout, "[1, -3, 2, 1, 2, -3]"]);
    assert!(check.starts_with("isomorphic"), "{check}");
}

#[test]
fn apply_uniform_dual_of_plane_loop() {
    let (stdout, _, code) = twual(&["apply", "[1,1]", "--uniform", "d"]);
    assert_eq!(code, 0);
    let g = twual::LabeledRibbonGraph::parse(&stdout).unwrap();
    assert_eq!(g.vertex_count(), 2);
}

#[test]
fn apply_pi_only_relabels() {
    let (stdout, _, code) = twual(&["apply", "[1,2,1,2]", "--gamma", "1,1", "--pi", "(1 2)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[2, 1, 2, 1]");
}

#[test]
fn classify_published_graph() {
    let (stdout, _, code) = twual(&["classify", "[1, -3, 2, 1, 2, -3]"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("trial=yes"));
    assert!(stdout.contains("dual=no"));
    assert!(stdout.contains("petrial=no"));
}

#[test]
fn invariants_json_record() {
    let (stdout, _, code) = twual(&["invariants", "[-1, -1]", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["V"], 1);
    assert_eq!(v["E"], 1);
    assert_eq!(v["F"], 1);
    assert_eq!(v["euler"], 1);
    assert_eq!(v["orientable"], false);
    assert_eq!(v["genus"], 1);
}

#[test]
fn enumerate_count() {
    assert_eq!(twual(&["enumerate", "2", "--count"]).0, "2");
    assert_eq!(twual(&["enumerate", "3", "--count"]).0, "5");
}

#[test]
fn census_summary_line() {
    let (stdout, _, code) = twual(&["census", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("classes: 1"), "{stdout}");
    let (stdout4, _, _) = twual(&["census", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout4).unwrap();
    assert_eq!(v["classes"], 0);
}

#[test]
fn stabilizers_include_printed_pair() {
    let (stdout, _, code) = twual(&["stabilizers", "[1,2,3,1,2,3]"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("((1,d,d), (1 2 3))"), "{stdout}");
}

#[test]
fn family_and_reduce() {
    let (stdout, _, code) = twual(&["family", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("H = [2, 1, 3, 2, 1, 3]"));
    let (reduced, _, code2) = twual(&["reduce", "[-1, -1]"]);
    assert_eq!(code2, 0);
    assert!(reduced.contains("oeb = [1, 1]"));
    assert!(reduced.contains("alpha = (t)"));
}

#[test]
fn iso_negative() {
    let (stdout, _, code) = twual(&["iso", "[1,2,1,2]", "[1,1,2,2]"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "not isomorphic");
}

#[test]
fn parse_errors_exit_one() {
    let (_, stderr, code) = twual(&["classify", "[1, 2]"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error"), "{stderr}");
    let (_, _, code2) = twual(&["census", "8"]);
    assert_eq!(code2, 1);
}

#[test]
fn apply_output_reparses_everywhere() {
    let (stdout, _, _) = twual(&["apply", "[1, 4, 2, 3, -5, 2, 1, -5, 4, 3]", "--uniform", "dt"]);
    let (inv, _, code) = twual(&["invariants", &stdout]);
    assert_eq!(code, 0);
    assert!(inv.starts_with("V="));
}
