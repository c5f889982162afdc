//! End-to-end tests of the `dsrg` binary: flags, output formats, exit codes.

use std::process::{Command, Output};

fn dsrg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsrg"))
        .args(args)
        .env_remove("DSRG_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn verify_accepts_genuine_dihedrant() {
    let out = dsrg(&["verify", "--n", "3", "--x", "1", "--y", "1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("(6,2,1,0,1)"), "missing params in: {text}");
    assert!(text.contains("genuine DSRG"));
}

#[test]
fn verify_rejects_with_witness() {
    let out = dsrg(&["verify", "--n", "6", "--x", "1,2", "--y", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).is_empty());
    assert!(stderr_of(&out).contains("not a DSRG"));
}

#[test]
fn verify_loop_element_is_usage_error() {
    let out = dsrg(&["verify", "--n", "3", "--x", "0", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_non_genuine_dsrg_with_flag() {
    // X = Z_3 ∖ {0} gives an undirected identity solution: t = k
    let out = dsrg(&["verify", "--n", "3", "--x", "1,2", "--y", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("DSRG (not genuine)"), "got: {text}");

    let out = dsrg(&["verify", "--n", "3", "--x", "1,2", "--y", "1,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["genuine"], false);
    assert_eq!(v["params"]["t"], v["params"]["k"]);
}

#[test]
fn verify_json_certificate_has_fixed_field_order() {
    let out = dsrg(&["verify", "--n", "4", "--x", "1,2", "--y", "1,2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    // fixed field names and order
    let npos = text.find("\"n\":").unwrap();
    let xpos = text.find("\"X\":").unwrap();
    let ypos = text.find("\"Y\":").unwrap();
    let ppos = text.find("\"params\":{\"N\":").unwrap();
    let gpos = text.find("\"genuine\":").unwrap();
    let epos = text.find("\"eigen\":").unwrap();
    assert!(npos < xpos && xpos < ypos && ypos < ppos && ppos < gpos && gpos < epos);
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(v["params"]["k"], 4);
    assert_eq!(v["params"]["mu"], 3);
    assert_eq!(v["params"]["lambda"], 1);
    assert_eq!(v["params"]["t"], 3);
    assert_eq!(v["genuine"], true);
    assert_eq!(v["eigen"]["m_rho"], 5);
    assert_eq!(v["classification"]["case"], "b");
}

#[test]
fn export_dot_counts_vertices_and_arcs() {
    let out = dsrg(&["export", "--n", "3", "--x", "1", "--y", "1", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(text.matches("label=").count(), 6);
    assert_eq!(text.matches(" -> ").count(), 12);
    assert!(text.contains("v0 [label=\"x^0\"]"));
    assert!(text.contains("v3 [label=\"x^0.t\"]"));
}

#[test]
fn export_json_adjacency_roundtrip() {
    let out = dsrg(&["export", "--n", "3", "--x", "1", "--y", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["adjacency"][0], serde_json::json!([1, 4]));
    // rebuild the matrix from the JSON and compare with the library's
    let spec = dsrg_core::DihedrantSpec::new(3, &[1], &[1]).unwrap();
    let a = dsrg_core::verify::adjacency_matrix(&spec);
    let adj = v["adjacency"].as_array().unwrap();
    assert_eq!(adj.len(), a.dim());
    for (g, row) in adj.iter().enumerate() {
        let neighbors: Vec<usize> =
            row.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
        let expected: Vec<usize> = (0..a.dim()).filter(|&h| a.entry(g, h) == 1).collect();
        assert_eq!(neighbors, expected, "row {g}");
    }
}

#[test]
fn export_writes_to_file() {
    let path = std::env::temp_dir().join(format!("dsrg-export-{}.dot", std::process::id()));
    let out = dsrg(&[
        "export", "--n", "3", "--x", "1", "--y", "1", "--format", "dot", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
    let body = std::fs::read_to_string(&path).expect("file written");
    assert!(body.starts_with("digraph dihedrant {"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn feasible_lists_known_tuples() {
    let out = dsrg(&["feasible", "--vertices", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("6\t2\t1\t0\t1"));
    assert!(text.contains("6\t3\t2\t1\t2"));
}

#[test]
fn classify_six_has_four_rows() {
    let out = dsrg(&["classify", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 4);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a\t6\t3\t1\t1,4\t12\t4\t2\t0\t2");
    assert_eq!(lines[2], "b\t6\t3\t1,2,3\t1,2,3\t12\t6\t4\t2\t4");
}

#[test]
fn spectrum_snaps_to_integers() {
    let out = dsrg(&["spectrum", "--n", "4", "--set", "1,2,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "z,re,im,snapped");
    assert!(lines[1].starts_with("0,") && lines[1].ends_with(",4"));
    assert!(lines[2].starts_with("1,") && lines[2].ends_with(",-2"));
    assert!(lines[3].starts_with("2,") && lines[3].ends_with(",0"));
}

#[test]
fn spectrum_json_carries_multiset_schema() {
    let out = dsrg(&["spectrum", "--n", "4", "--set", "1,2,2,3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("{\"n\":4,\"counts\":[0,1,2,1],"), "got: {text}");
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(v["values"][1]["snapped"], -2);
}

#[test]
fn construct_families_and_checks() {
    let out = dsrg(&["construct", "c51", "--n", "9", "--v", "3", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("1,4,7"));

    let out = dsrg(&["construct", "c51", "--n", "3", "--v", "3", "--t", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("both 1 and 2"));

    let out = dsrg(&["construct", "c52", "--n", "8", "--v", "2", "--tprime", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("1,2,5,6"));

    let out = dsrg(&["construct", "t11", "--n", "3", "--x", "1", "--y", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("(6,2,1,0,1)"));

    // shifting Y leaves the conditions invariant
    let out = dsrg(&["construct", "t11", "--n", "3", "--x", "1", "--y", "1", "--b-shift", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = dsrg(&["construct", "t13", "--n", "4", "--x", "1", "--y", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("conditions hold"));
    assert!(text.contains("printed parameters: (8,3,1,1,2)"));
    assert!(text.contains("not a DSRG"));
    assert!(text.contains("matches printed parameters: no"));

    let out = dsrg(&["construct", "t13", "--n", "4", "--x", "1", "--y", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = dsrg(&["construct", "t11", "--n", "3", "--x", "1", "--y", "0,1", "--eps", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["params"]["k"], 3);
    assert_eq!(v["genuine"], true);

    let out = dsrg(&["construct", "t13", "--n", "4", "--x", "1", "--y", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["matches_printed"], false);
    assert!(v["oracle_witness"].is_string());
}

#[test]
fn tolerance_env_is_honored() {
    // an absurdly tight tolerance stops snapping of inexact values
    let out = Command::new(env!("CARGO_BIN_EXE_dsrg"))
        .args(["spectrum", "--n", "3", "--set", "1"])
        .env("DSRG_TOLERANCE", "1e-30")
        .output()
        .expect("binary runs");
    let text = stdout_of(&out);
    // z=0 is computed exactly; the nonprincipal values are irrational sums
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].ends_with(",1"));
    assert!(lines[2].ends_with(','), "line: {}", lines[2]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = dsrg(&["classify", "--n", "12"]);
    let b = dsrg(&["classify", "--n", "12"]);
    assert_eq!(a.stdout, b.stdout);
    let a = dsrg(&["bruteforce", "--n", "8"]);
    let b = dsrg(&["bruteforce", "--n", "8"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_count_does_not_change_output() {
    let serial = dsrg(&["bruteforce", "--n", "10", "--threads", "1"]);
    let parallel = dsrg(&["bruteforce", "--n", "10", "--threads", "4"]);
    assert_eq!(serial.status.code(), parallel.status.code());
    assert_eq!(serial.stdout, parallel.stdout);

    let serial = dsrg(&["bruteforce", "--n", "5", "--general-y", "--threads", "1"]);
    let parallel = dsrg(&["bruteforce", "--n", "5", "--general-y", "--threads", "3"]);
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(serial.status.code(), Some(0));
}

#[test]
fn bruteforce_tsv_row_shape() {
    let out = dsrg(&["bruteforce", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "4\t1,2\t8\t4\t3\t1\t3");
    assert_eq!(lines[1], "4\t2,3\t8\t4\t3\t1\t3");
}
