use std::process::Command;

use krlab::crystal::graph::GraphWire;

fn krlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_krlab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("krlab").chain(args.iter().copied());
    let code = krlab::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn generate_dot_a2_cycle() {
    let (code, out, _) = krlab(&["generate", "A2~1", "1", "1", "--dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[label=\"").count(), 6);
    assert_eq!(out.matches(" -> ").count(), 3);
}

#[test]
fn generate_json_counts_and_round_trip() {
    let (code, out, _) = run(&["generate", "A4~2", "1", "1", "--json"]);
    assert_eq!(code, 0);
    let g: GraphWire = serde_json::from_str(&out).unwrap();
    assert_eq!(g.nodes.len(), 5);
    let again = serde_json::to_string_pretty(&g.clone().normalized()).unwrap() + "\n";
    assert_eq!(again, out);
    let (_, out2, _) = run(&["generate", "A4~2", "1", "1", "--json"]);
    assert_eq!(out, out2);
}

#[test]
fn out_of_scope_type() {
    let (code, _, err) = krlab(&["generate", "D4~1", "1", "1"]);
    assert_eq!(code, 3);
    assert!(err.contains("native D-type KR model out of scope"), "{err}");
}

#[test]
fn malformed_input_is_an_error() {
    assert_eq!(run(&["rmatrix", "A2~1", "1,1", "1,1", "1 * 4"]).0, 2);
    assert_eq!(run(&["rmatrix", "A2~1", "1,1", "1,1", "1 1"]).0, 2);
    assert_eq!(run(&["rmatrix", "A2~1", "1;1", "1,1"]).0, 2);
    assert_eq!(run(&["generate", "Q3~1", "1", "1"]).0, 2);
    assert_eq!(run(&["verify", "nonsense"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn node_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_krlab"))
        .args(["generate", "A3~1", "2", "2"])
        .env("KRLAB_NODE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 5"));
}

#[test]
fn rmatrix_anchor_goes_to_swapped_anchor() {
    let (code, out, _) = run(&["rmatrix", "A2~1", "1,1", "2,1", "1 * 1/2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("R(1 * 1/2) = 1/2 * 1\n"), "{out}");
}

#[test]
fn rmatrix_table_is_a_bijection() {
    let (code, out, _) = run(&["rmatrix", "A2~1", "1,1", "1,1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for row in rows {
        assert_eq!(row["input"], row["image"]);
    }
}

#[test]
fn verify_suites_exit_codes() {
    assert_eq!(run(&["verify", "wtilde", "--max-rank", "4"]).0, 0);
    assert_eq!(run(&["verify", "demazure", "A2~1", "1", "1"]).0, 0);
    assert_eq!(run(&["verify", "rmatrix", "A2~1", "1,1", "2,1"]).0, 0);
    assert_eq!(run(&["verify", "rmatrix", "A2~1", "1,2", "2,2", "--sample", "5", "--seed", "3"]).0, 0);
    assert_eq!(run(&["verify", "paths", "A4~2", "2", "2"]).0, 1);
    assert_eq!(run(&["verify", "axioms", "D5~1", "2", "1"]).0, 3);
}

#[test]
fn verify_json_report() {
    let (code, out, _) = run(&["verify", "characters", "A3~1", "2", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "characters");
    assert_eq!(v["failed"], 0);
    assert_eq!(v["assertions"][0]["status"], "pass");
}

#[test]
fn paths_listing_for_types_without_a_crystal() {
    let (code, out, _) = run(&["paths", "C3~1", "2", "3", "--json"]);
    assert_eq!(code, 0);
    assert!(out.contains("(f₀²f₁²)(f₀⁶)"), "{out}");
    assert_eq!(run(&["paths", "C3~1", "2", "3", "--run"]).0, 3);
}

#[test]
fn character_command() {
    let (code, out, _) = run(&["character", "A4~2", "1", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("matches"), "{out}");
}
