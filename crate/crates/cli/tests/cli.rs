use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcubic"))
        .args(args)
        .env_remove("SUBCUBIC_MAX_VERTICES")
        .env_remove("SUBCUBIC_ENUM_MAX")
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad record `{l}`: {e}")))
        .collect()
}

fn summary(out: &Output) -> Value {
    records(out)
        .into_iter()
        .find(|r| r["summary"] == true)
        .expect("summary record")
}

#[test]
fn solve_catalog_graphs() {
    for (name, phi) in [("dodecahedron", 6), ("petersen", 3), ("Q3", 3), ("K4", 2)] {
        let out = run(&["solve", "--name", name]);
        assert_eq!(out.status.code(), Some(0));
        let r = &records(&out)[0];
        assert_eq!(r["phi"], phi, "{name}");
        assert_eq!(r["certificate_ok"], true);
        assert_eq!(
            r["forest_size"].as_u64().unwrap() + phi,
            r["vertices"].as_u64().unwrap()
        );
    }
}

#[test]
fn solve_with_edge_deleted_and_required_vertex() {
    let out = run(&["solve", "--name", "C5", "--minus-edge", "0"]);
    assert_eq!(records(&out)[0]["phi"], 0);
    let out = run(&["solve", "--name", "petersen", "--required", "4"]);
    let r = &records(&out)[0];
    assert_eq!(r["phi"], 3);
    assert!(r["fvs"].as_array().unwrap().contains(&Value::from(4)));
}

#[test]
fn family_listings() {
    let out = run(&["family", "3", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let s = summary(&out);
    assert_eq!(s["count"], 3);
    assert_eq!(s["size_law_holds"], true);
    assert_eq!(records(&out).len(), 4);

    let out = run(&["family", "4", "2", "--girth-min", "5"]);
    let members: Vec<Value> = records(&out).into_iter().filter(|r| r["summary"] != true).collect();
    assert_eq!(members.len(), 1);
    assert_eq!(
        (members[0]["vertices"].as_u64(), members[0]["edges"].as_u64()),
        (Some(10), Some(14))
    );

    let out = run(&["family", "1", "0"]);
    let r = &records(&out)[0];
    assert_eq!(r["medge"], serde_json::json!([[0, 0]]));

    let out = run(&["family", "3", "0", "--g", "4", "--k", "1", "--format", "graph6"]);
    assert_eq!(summary(&out)["expected_vertices"], 9);
    assert!(records(&out)[0]["graph6"].is_string());
}

#[test]
fn family_errors_exit_with_two() {
    assert_eq!(run(&["family", "5", "6"]).status.code(), Some(0));
    assert_eq!(run(&["family", "7", "5"]).status.code(), Some(2));
    assert_eq!(run(&["family", "1", "0", "--format", "graph6"]).status.code(), Some(2));
    assert_eq!(run(&["family", "3", "0", "--g", "4"]).status.code(), Some(2));
}

#[test]
fn verify_enumerated_graphs() {
    let out = run(&["verify", "--n-max", "8", "--g", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let s = summary(&out);
    assert_eq!(s["violations"], 0);
    assert_eq!(records(&out).len(), 1);

    let out = run(&["verify", "--n-max", "10", "--g", "5", "--workers", "2"]);
    let s = summary(&out);
    assert_eq!(s["violations"], 0);
    assert!(
        s["cases"]
            .as_object()
            .unwrap()
            .values()
            .map(|v| v.as_u64().unwrap())
            .sum::<u64>()
            > 0
    );
}

#[test]
fn verify_records_are_deterministic() {
    let strip = |out: Output| {
        records(&out)
            .into_iter()
            .map(|mut r| {
                r.as_object_mut().unwrap().remove("elapsed_ms");
                r
            })
            .collect::<Vec<_>>()
    };
    let a = strip(run(&[
        "verify",
        "--n-max",
        "7",
        "--g",
        "4",
        "--emit-all",
        "--workers",
        "1",
    ]));
    let b = strip(run(&[
        "verify",
        "--n-max",
        "7",
        "--g",
        "4",
        "--emit-all",
        "--workers",
        "3",
    ]));
    assert_eq!(a, b);
    assert!(a.len() > 100);
}

#[test]
fn verify_named_graph() {
    let out = run(&["verify", "--name", "Q3", "--g", "4"]);
    let explicit = records(&out).into_iter().find(|r| r["claim"] == "explicit_g4").unwrap();
    assert_eq!(explicit["case"], "1a");
    assert_eq!(explicit["relation"], "=");
    assert_eq!(explicit["lhs"], explicit["rhs"]);
    assert_eq!(explicit["lhs"], "3/1");
}

#[test]
fn verify_refuses_large_enumeration_and_bad_class() {
    assert_eq!(run(&["verify", "--n-max", "13", "--g", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "5", "--g", "6"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_subcubic"))
        .args(["verify", "--n-max", "6", "--g", "4"])
        .env("SUBCUBIC_ENUM_MAX", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dodeca_reports() {
    for (name, condition) in [("dodecahedron", true), ("petersen", false), ("K4", false)] {
        let out = run(&["dodeca", "--name", name]);
        assert_eq!(out.status.code(), Some(0));
        let r = &records(&out)[0];
        assert_eq!(r["lhs"], condition);
        assert_eq!(r["holds"], true);
    }
    assert_eq!(run(&["dodeca", "--name", "K3"]).status.code(), Some(2));
}

#[test]
fn reads_graph_files() {
    let mut g6 = tempfile::NamedTempFile::new().unwrap();
    writeln!(g6, "C~\nIheA@GUAo").unwrap();
    let out = run(&["solve", "--input", g6.path().to_str().unwrap()]);
    let phis: Vec<Value> = records(&out).iter().map(|r| r["phi"].clone()).collect();
    assert_eq!(phis, vec![Value::from(2), Value::from(3)]);

    let mut medge = tempfile::NamedTempFile::new().unwrap();
    writeln!(medge, "# one loop and a digon\n1 1\n0 0\n2 2\n0 1\n0 1").unwrap();
    let out = run(&["solve", "--input", medge.path().to_str().unwrap(), "--format", "medge"]);
    let phis: Vec<Value> = records(&out).iter().map(|r| r["phi"].clone()).collect();
    assert_eq!(phis, vec![Value::from(1), Value::from(1)]);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "3 2\n0 1\nbogus").unwrap();
    let out = run(&["solve", "--input", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["solve"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--name", "nosuchgraph"]).status.code(), Some(2));
    assert_eq!(
        run(&["solve", "--name", "K4", "--required", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn solver_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_subcubic"))
        .args(["solve", "--name", "petersen"])
        .env("SUBCUBIC_MAX_VERTICES", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
