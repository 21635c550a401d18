use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.display().to_string()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverkit"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn labels(v: &Value) -> Vec<&str> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|m| m["module"].as_str().unwrap())
        .collect()
}

#[test]
fn analyze_square_and_loop() {
    let (code, v) = json(&["analyze", &fixture("square_and_loop.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
    let c = &v["classification"];
    assert_eq!(c["verdict"], "JACOBIAN_2CY_TILTED");
    assert_eq!(c["potential"], "alpha.beta.gamma.delta + lambda^5");
    assert_eq!(c["exponents"], serde_json::json!([1, 5]));
    let comps = c["decomposition"]["components"].as_array().unwrap();
    let nr: Vec<(u64, u64)> = comps
        .iter()
        .map(|k| (k["n"].as_u64().unwrap(), k["r"].as_u64().unwrap()))
        .collect();
    assert_eq!(nr, [(4, 3), (1, 4)]);
}

#[test]
fn classify_linear_a4_is_not_tilted() {
    let (code, v) = json(&["classify", &fixture("linear_a4.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"]["verdict"], "NOT_2CY_TILTED");
    assert_eq!(v["classification"]["gorenstein"]["value"], 2);
}

#[test]
fn gp_two_cluster_d6_by_each_method() {
    let path = fixture("two_cluster_d6.json");
    for method in ["omega-tau", "ext"] {
        let (code, v) = json(&["gp", &path, "--method", method, "--m", "2"]);
        assert_eq!(code, 0, "{method}");
        let mut found = labels(&v["gorenstein_projective"]);
        found.sort();
        assert_eq!(found, ["S(3)", "S(6)", "beta", "epsilon"], "{method}");
    }
    let (code, v) = json(&["gp", &path, "--method", "omega-tau", "--cross-check"]);
    assert_eq!(code, 0);
    assert_eq!(v["m"], 2);
}

#[test]
fn gp_kalck_needs_gentle() {
    let (code, v) = json(&["gp", &fixture("linear_a4.json"), "--method", "kalck"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 0);
    let (code, v) = json(&[
        "gp",
        &fixture("triangles_and_loop.json"),
        "--method",
        "kalck",
    ]);
    assert_eq!(code, 2);
    assert!(v["error"]["messages"].is_array());
}

#[test]
fn module_operations() {
    let path = fixture("two_cluster_d6.json");
    let (code, v) = json(&["module", &path, "--simple", "3", "--op", "tau"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimension_vector"], "1:0 2:1 3:0 4:0 5:0 6:0");
    let (code, v) = json(&[
        "module",
        &path,
        "--module",
        "omega^3 tau string:epsilon",
        "--op",
        "iso",
        "--with",
        "string:epsilon",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["isomorphic"], true);
    assert_eq!(v["result"]["evidence"], "certificate");
    let (code, _) = json(&["module", &path, "--string", "nosuch", "--op", "tau"]);
    assert_eq!(code, 2);
}

#[test]
fn angulate_hexagon_fan() {
    let (code, v) = json(&["angulate", &data("hexagon_fan.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["m"], 1);
    assert_eq!(v["quiver"]["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["quiver"]["arrows"].as_array().unwrap().len(), 2);
}

#[test]
fn angulate_without_arcs_gives_empty_quiver() {
    let (code, v) = json(&["angulate", &data("square.json")]);
    assert_eq!(code, 0);
    assert!(v["quiver"]["vertices"].as_array().unwrap().is_empty());
}

#[test]
fn bad_inputs_exit_2() {
    for (cmd, file) in [
        ("angulate", data("corrupted_faces.json")),
        ("analyze", data("nested_relations.json")),
        ("analyze", data("empty_quiver.json")),
        ("analyze", "does/not/exist.json".to_string()),
    ] {
        let out = run(&[cmd, &file]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error: "),
            "{file}"
        );
    }
}

#[test]
fn reports_are_deterministic() {
    let path = fixture("triangles_and_loop.json");
    for args in [
        vec!["analyze", path.as_str()],
        vec!["gp", path.as_str(), "--method", "ext", "--m", "1"],
        vec![
            "--seed",
            "5",
            "module",
            path.as_str(),
            "--string",
            "alpha1",
            "--op",
            "iso",
            "--with",
            "string:alpha1",
        ],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn angulate_then_verify_closes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let out = out.to_str().unwrap();
    for (input, m) in [
        ("hexagon_fan.json", "1"),
        ("dodecagon_inner_square.json", "2"),
    ] {
        let (code, _) = json(&["angulate", &data(input), "--out", out]);
        assert_eq!(code, 0);
        assert_eq!(json(&["analyze", out]).0, 0, "{input}");
        assert_eq!(json(&["verify", out, "--m", m]).0, 0, "{input}");
        assert_eq!(json(&["verify", &data(input)]).0, 0, "{input}");
    }
}

#[test]
fn human_and_dot_formats() {
    let path = fixture("linear_a4.json");
    let human = String::from_utf8(run(&["--format", "human", "analyze", &path]).stdout).unwrap();
    assert!(human.contains("verdict: NOT_2CY_TILTED"));
    let dot = String::from_utf8(run(&["--format", "dot", "analyze", &path]).stdout).unwrap();
    assert!(dot.starts_with("digraph Q {"));
    assert!(dot.contains("\"2\" -> \"1\" [label=\"alpha\"];"));
}
