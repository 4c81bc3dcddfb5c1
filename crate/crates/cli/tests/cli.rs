use std::io::Write;
use std::process::{Command, Output, Stdio};

use safeset_core::{graph6, Graph};
use serde_json::Value;

fn safeset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_safeset")).args(args).output().expect("binary runs")
}

fn safeset_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_safeset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn g6(g: &Graph) -> String {
    graph6::encode(g).unwrap()
}

#[test]
fn solve_four_cycle() {
    let out = safeset(&["solve", "-g", "Cl"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["s"], "2");
    assert_eq!(v["cs"], "2");
}

#[test]
fn solve_with_weights_and_all_optima() {
    let p5 = g6(&Graph::path(5));
    let out = safeset(&["solve", "-g", &p5, "--weights", "[5,5,1,4,4]", "--all"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["s"].as_str(), v["cs"].as_str()), (Some("9"), Some("10")));
    assert_eq!(v["allMinimumSafeSets"], serde_json::json!([[1, 3]]));
    let out = safeset(&["solve", "-g", &p5, "--weights", r#"{"weights": ["1/2", 1, 1, 1, 1]}"#]);
    assert!(out.status.success());
}

#[test]
fn recognize_k33_minus_edge() {
    let mut edges: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    edges.retain(|&e| e != (0, 3));
    let g = Graph::from_edges(6, &edges).unwrap();
    let out = safeset(&["recognize", "-g", &g6(&g)]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["verdict"], "MEMBER");
    assert_eq!(v["family"], "K33_MINUS_EDGE");
}

#[test]
fn witness_on_cycle_is_unknown() {
    let out = safeset(&["witness", "-g", &g6(&Graph::cycle(6))]);
    assert!(out.status.success());
    assert_eq!(json(&out)["result"], "unknown");
}

#[test]
fn witness_then_verify() {
    let out = safeset(&["witness", "-g", &g6(&Graph::path(5))]);
    assert!(out.status.success());
    let cert = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&cert).unwrap();
    assert_eq!(v["pattern"], "H1");

    let ok = safeset_stdin(&["verify-certificate", "-"], &cert);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["result"], "pass");

    let mut tampered = v.clone();
    tampered["s"] = Value::String("8".into());
    let bad = safeset_stdin(&["verify-certificate", "-"], &tampered.to_string());
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["result"], "fail");
}

#[test]
fn contract_partition_and_set() {
    let c6 = g6(&Graph::cycle(6));
    let out = safeset(&["contract", "-g", &c6, "--set", "[0,3]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(graph6::decode(v["quotient"].as_str().unwrap()).unwrap().edge_count(), 4);
    assert_eq!(v["bagSide"], serde_json::json!(["IN_S", "IN_S", "OUT_S", "OUT_S"]));

    let out = safeset(&["contract", "-g", &c6, "--partition", r#"{"bags": [[0,1,2],[3,4,5]]}"#]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["quotient"], g6(&Graph::path(2)));
    assert_eq!(v["bagOf"], serde_json::json!([0, 0, 0, 1, 1, 1]));
}

#[test]
fn campaign_on_listed_graphs() {
    let dir = std::env::temp_dir().join(format!("safeset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("graphs.g6");
    let lines = [Graph::path(5), Graph::cycle(6), Graph::complete_bipartite(2, 3), Graph::book(2)]
        .iter()
        .map(g6)
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&input, lines).unwrap();
    let csv = dir.join("report.csv");
    let out = safeset(&[
        "campaign",
        "--input",
        input.to_str().unwrap(),
        "--filter",
        "bipartite",
        "--samples",
        "5",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(safeset(&["solve", "-g", "not graph6!"]).status.code(), Some(2));
    assert_eq!(safeset(&["solve", "-g", "Cl", "--weights", "[1,2"]).status.code(), Some(2));
    assert_eq!(safeset(&["solve", "-g", "Cl", "--weights", "[1,2,3]"]).status.code(), Some(2));
    assert_eq!(safeset(&["contract", "-g", "Cl", "--set", "[9]"]).status.code(), Some(2));
    assert_eq!(safeset_stdin(&["verify-certificate", "-"], "{").status.code(), Some(2));
    assert_eq!(safeset(&["campaign", "--filter", "planar"]).status.code(), Some(2));
}
