use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use nugraph::{build_nu, from_dimacs, from_graph6};
use serde_json::Value;

fn nugraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nugraph")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nugraph-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn params_for_the_smallest_plane() {
    let out = nugraph(&["params", "--n", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["match"], true);
    assert_eq!(r["identity_holds"], true);
    assert_eq!(r["schema_version"], 1);
    for (key, value) in [("v", 12), ("k", 9), ("lambda", 6), ("mu", 9)] {
        assert_eq!(r[key], value, "{key}");
        assert_eq!(r["measured"][key], value, "measured {key}");
    }
    assert_eq!(r["complement_params"]["measured"]["k"], 2);
    assert_eq!(r["spectrum"]["m1"], 8);
    assert_eq!(r["vertex_labels"].as_array().unwrap().len(), 12);
}

#[test]
fn theorem1_small_cases() {
    let r = json(&nugraph(&["theorem1", "--q", "2"]));
    assert_eq!(r["aut_order"], "31104");
    assert_eq!(r["confirmed"], true);
    assert_eq!(r["wreath"]["wreath_order"], "31104");

    let out = nugraph(&["theorem1", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["aut_order"], "12096");
    assert_eq!(r["pgammau_order"], "12096");
    assert_eq!(r["orders_equal"], true);
    assert_eq!(r["tangent_action"]["two_transitive"], true);
    assert_eq!(r["tangent_action"]["three_transitive"], false);
}

#[test]
fn clique_census() {
    let out = nugraph(&["cliques", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["census_holds"], true);
    assert_eq!(r["by_size"]["9"], 28);
    assert_eq!(r["tangent_type"], 28);
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let a = nugraph(&["aut", "--n", "2", "--q", "3"]);
    let b = nugraph(&["aut", "--n", "2", "--q", "3"]);
    let c = nugraph(&["--threads", "1", "aut", "--n", "2", "--q", "3"]);
    let d = nugraph(&["--threads", "4", "aut", "--n", "2", "--q", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(a.stdout, d.stdout);
    assert_eq!(json(&a)["order"], "12096");
}

#[test]
fn build_writes_readable_files() {
    let expected = build_nu(2, 3).unwrap().graph;
    let g6 = scratch("nu3.g6");
    let out = nugraph(&["build", "--n", "2", "--q", "3", "--out", g6.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["edges"], 1008);
    let text = fs::read_to_string(&g6).unwrap();
    assert_eq!(from_graph6(text.trim_end()).unwrap().rows(), expected.rows());

    let dimacs = scratch("nu2.dimacs");
    let out = nugraph(&["build", "--n", "2", "--q", "2", "--out", dimacs.to_str().unwrap(), "--format", "dimacs"]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&dimacs).unwrap();
    assert_eq!(text.lines().next(), Some("p edge 12 54"));
    assert_eq!(from_dimacs(&text).unwrap().rows(), build_nu(2, 2).unwrap().graph.rows());

    let comp = scratch("nu2c.dimacs");
    let out = nugraph(&[
        "build", "--n", "2", "--q", "2", "--complement", "--out", comp.to_str().unwrap(), "--format", "dimacs",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&comp).unwrap().lines().next(), Some("p edge 12 12"));
    fs::remove_dir_all(g6.parent().unwrap()).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(nugraph(&["theorem1", "--q", "6"]).status.code(), Some(2));
    assert_eq!(nugraph(&["theorem1"]).status.code(), Some(2));
    assert_eq!(nugraph(&["cliques", "--n", "3", "--q", "2"]).status.code(), Some(2));
    assert_eq!(nugraph(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn resource_caps_exit_3() {
    assert_eq!(nugraph(&["aut", "--n", "2", "--q", "11"]).status.code(), Some(3));
    assert_eq!(nugraph(&["--max-vertices", "100", "aut", "--n", "2", "--q", "4"]).status.code(), Some(3));
}

#[test]
fn selftest_passes() {
    let out = nugraph(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["passed"], true);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
