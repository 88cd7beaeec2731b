use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use spancom::edge_list;
use spancom::graph::{AttachmentShape, UnicyclicGraph};
use spancom::report::graph_report;

fn spancom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spancom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_c4_uses_cycle_labeling() {
    let o = spancom(&["gen", "4", "4"]);
    assert!(o.status.success());
    let g = edge_list::parse(&stdout(&o)).unwrap();
    assert_eq!(g.edges(), &[(1, 2), (2, 3), (3, 4), (1, 4)]);
}

#[test]
fn gen_star_and_seeded_determinism() {
    let o = spancom(&["gen", "4", "3", "star"]);
    let g = edge_list::parse(&stdout(&o)).unwrap();
    assert_eq!(g.edges()[3], (1, 4));
    let a = spancom(&["gen", "6", "3", "seed:7"]);
    let b = spancom(&["gen", "--n", "6", "--m", "3", "--attachment", "seed:7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_to_file_round_trips_through_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.txt");
    let o = spancom(&["gen", "8", "5", "seed:3", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n=8 m=5\n");
    let from_file: Value = serde_json::from_slice(&spancom(&["report", path.to_str().unwrap()]).stdout).unwrap();
    let in_memory = UnicyclicGraph::with_shape(8, 5, AttachmentShape::Seeded(3)).unwrap();
    assert_eq!(from_file, graph_report(in_memory.base()).unwrap());
}

#[test]
fn trees_listing_and_counts() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "4\n1 2\n2 3\n3 4\n1 4\n");
    let o = spancom(&["trees", &c4]);
    assert_eq!(stdout(&o), "1 2 3\n1 2 4\n1 3 4\n2 3 4\ncount: 4\n");

    let tree = write(dir.path(), "tree.txt", "3\n1 2\n2 3\n");
    assert_eq!(stdout(&spancom(&["trees", "--input", &tree])), "1 2\ncount: 1\n");

    let o = spancom(&["trees", "--n", "9", "--m", "5", "--count-only"]);
    assert_eq!(stdout(&o), "5\n");

    let o = spancom(&["trees", &c4, "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 4);
}

#[test]
fn report_fields() {
    let v: Value = serde_json::from_slice(&spancom(&["report", "--n", "4", "--m", "3"]).stdout).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([4, 6, 3]));
    assert_eq!(v["h_vector"]["normalized"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["hilbert"]["pole_order"], 3);

    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "# square\n4\n1 2\n2 3\n3 4\n1 4\n");
    let v: Value = serde_json::from_slice(&spancom(&["report", &c4]).stdout).unwrap();
    assert_eq!(v["shifted"], true);
    assert_eq!(v["shelling_order"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn closed_form_report_at_scale() {
    let o = spancom(&["report", "--closed-form", "--n", "200", "--m", "100"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f_vector"].as_array().unwrap().len(), 199);
    assert_eq!(v["hilbert"]["pole_order"], 199);
    assert_eq!(v["shifted"], "skipped");
    assert_eq!(v["minimal_nonfaces"], "skipped");
}

#[test]
fn verify_exit_codes() {
    let o = spancom(&["verify", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("all passed\n"));

    let o = spancom(&["verify", "4", "--inject-fault", "f-off-by-one", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overall"], false);
    let failing: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap())
        .filter(|c| c["match"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|&n| n == "f_vector"));

    let o = spancom(&["verify", "4", "--expand-to", "0", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let hf = v["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "hilbert_function")
        .unwrap();
    assert_eq!(hf["oracle_value"], serde_json::json!([1]));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3\n1 1\n");
    assert_eq!(spancom(&["trees", &bad]).status.code(), Some(2));
    let split = write(dir.path(), "split.txt", "4\n1 2\n3 4\n");
    assert_eq!(spancom(&["trees", &split]).status.code(), Some(2));
    assert_eq!(spancom(&["report", &split]).status.code(), Some(2));
    assert_eq!(spancom(&["trees", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(spancom(&["gen", "4", "2"]).status.code(), Some(2));
    assert_eq!(spancom(&["report", "--closed-form", "--n", "5"]).status.code(), Some(2));
    assert_eq!(spancom(&["gen", "4", "3", "spiral"]).status.code(), Some(2));
}
