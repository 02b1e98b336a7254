use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cmgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmgraph")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn fig1_file(dir: &Path) -> String {
    let path = dir.join("fig1.edges");
    let out = cmgraph(&["fixtures", "fig1", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    path.to_str().unwrap().to_owned()
}

#[test]
fn cm_profile_of_fig1() {
    let dir = tempfile::tempdir().unwrap();
    let g = fig1_file(dir.path());
    let out = cmgraph(&["cm", &g, "--char", "0", "--char", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["is_cm"], true);
    assert_eq!(v[1]["is_cm"], false);
    assert_eq!(v[1]["witness"]["face"], serde_json::json!([]));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"[{"characteristic":0,"is_cm":true,"witness":null},{"characteristic":2,"is_cm":false,"witness":{"face":[],"index":1}}]"#
    );
}

#[test]
fn fixture_file_matches_bundled_text() {
    let dir = tempfile::tempdir().unwrap();
    let g = fig1_file(dir.path());
    let text = fs::read_to_string(g).unwrap();
    assert_eq!(text, cmgraph_core::fixtures::FIG1_EDGES);
    assert!(text.starts_with("11 25\n1 4\n"));
}

#[test]
fn fixture_errors() {
    let out = cmgraph(&["fixtures", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/g.edges");
    let out = cmgraph(&["fixtures", "fig1", "-o", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unmixed_p3_is_false() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.edges", "3 2\n1 2\n2 3\n");
    let out = cmgraph(&["unmixed", &p3]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["maximal_independent_set_sizes"], serde_json::json!([1, 2]));
}

#[test]
fn matchings_of_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.edges", "3 3\n1 2\n1 3\n2 3\n");
    let out = cmgraph(&["matchings", &k3, "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!([[[1, 2, 3]]]));
    let out = cmgraph(&["matchings", &k3, "--r", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn perfect_and_classg_on_c5() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.edges", "# five-cycle\n5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    let out = cmgraph(&["perfect", &c5]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["odd_hole"].as_array().unwrap().len(), 5);
    let out = cmgraph(&["classg", &c5]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["alpha"], 2);
}

#[test]
fn shellable_and_homology() {
    let dir = tempfile::tempdir().unwrap();
    let g = fig1_file(dir.path());
    let out = cmgraph(&["shellable", &g]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "not_shellable");

    let p4 = write(dir.path(), "p4.edges", "4 3\n1 2\n2 3\n3 4\n");
    let out = cmgraph(&["shellable", &p4]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "shellable");

    let out = cmgraph(&["homology", &g, "--char", "2"]);
    let v = json(&out);
    assert_eq!(v["f_vector"], serde_json::json!([1, 11, 30, 20]));
    assert_eq!(v["betti"][0]["betti"], serde_json::json!([0, 0, 1, 1]));

    let tri = write(dir.path(), "tri.complex", "3 3\n1 2\n2 3\n1 3\n");
    let out = cmgraph(&["homology", "--complex", &tri, "--char", "0"]);
    assert_eq!(json(&out)["betti"][0]["betti"], serde_json::json!([0, 0, 1]));
}

#[test]
fn cover_from_file_keeps_order() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write(dir.path(), "bowtie.edges", "5 6\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n");
    let cover = write(dir.path(), "cover.txt", "5 2\n3 4 5\n1 2 3\n");
    let out = cmgraph(&["cover", &bowtie, &cover]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["basic"], serde_json::json!([[3, 4, 5], [1, 2]]));
    let bad = write(dir.path(), "bad.txt", "5 1\n1 2 3\n");
    assert_eq!(cmgraph(&["cover", &bowtie, &bad]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(dir.path(), "dup.edges", "3 2\n1 2\n1 2\n");
    assert_eq!(cmgraph(&["unmixed", &dup]).status.code(), Some(2));
    assert_eq!(cmgraph(&["unmixed", "/nonexistent/file"]).status.code(), Some(2));
    let p2 = write(dir.path(), "p2.edges", "2 1\n1 2\n");
    assert_eq!(cmgraph(&["cm", &p2, "--char", "4"]).status.code(), Some(2));
    assert_eq!(cmgraph(&["cm", &p2, "--bogus"]).status.code(), Some(2));
}

#[test]
fn harness_runs_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let run = |p: &Path, jobs: &str| {
        cmgraph(&["harness", "bipartite", "--n-max", "6", "--jobs", jobs, "-o", p.to_str().unwrap()])
    };
    let out_a = run(&a, "1");
    let out_b = run(&b, "4");
    assert_eq!(out_a.status.code(), Some(0));
    assert_eq!(out_a.stdout, out_b.stdout);
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let lines: Vec<Value> = String::from_utf8(ta)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), json(&out_a)["graphs"].as_u64().unwrap() as usize);
    for l in &lines {
        assert!(l["canon"].is_string() && l["properties"].is_object() && l["violations"].is_array());
    }
}

#[test]
fn output_is_identical_across_invocations() {
    let dir = tempfile::tempdir().unwrap();
    let g = fig1_file(dir.path());
    let a = cmgraph(&["homology", &g, "--pretty"]);
    let b = cmgraph(&["homology", &g, "--pretty"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().contains("\n  "));
}
