use std::path::Path;
use std::process::{Command, Output};

use pentaplane::{build_named, io, PlaneGraph};
use serde_json::Value;
use tempfile::TempDir;

fn pentaplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentaplane"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write_fixture(dir: &TempDir, name: &str) -> String {
    let path = dir.path().join(format!("{name}.json"));
    std::fs::write(&path, io::to_json(&build_named(name).unwrap())).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_reports_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let o = pentaplane(&["validate", &write_fixture(&dir, "c5")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["report"]["is_pentagulation"], true);

    let o = pentaplane(&["validate", &write_fixture(&dir, "k4")]);
    assert_eq!(code(&o), 2);

    let o = pentaplane(&["validate", &write_fixture(&dir, "script_i")]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["diameter"], 3);
    assert_eq!(v["schema_version"], 1);

    let missing = dir.path().join("missing.json");
    assert_eq!(
        code(&pentaplane(&["validate", missing.to_str().unwrap()])),
        1
    );
}

#[test]
fn lemmas_on_a_fixture() {
    let dir = TempDir::new().unwrap();
    let o = pentaplane(&[
        "lemmas",
        &write_fixture(&dir, "script_h"),
        "--outer-face",
        "1",
    ]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout_json(&o)["report"]["checks"]
            .as_array()
            .unwrap()
            .len()
            > 5
    );
    assert_eq!(
        code(&pentaplane(&["lemmas", &write_fixture(&dir, "k4")])),
        2
    );
}

#[test]
fn verify_sweeps() {
    let o = pentaplane(&["verify", "--max-n", "8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["graphs_checked"], 4);

    let o = pentaplane(&[
        "verify",
        "--max-n",
        "11",
        "--girth-min",
        "5",
        "--diameter",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert!(v["graphs_checked"].as_u64().unwrap() > 0);
    assert!(v["max_degree_girth5_diameter3"].as_u64().unwrap() <= 7);

    let o = pentaplane(&["verify", "--max-n", "99"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("99"));
}

#[test]
fn family_members() {
    let o = pentaplane(&["family", "--delta", "9"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(
        (v["n"].as_u64(), v["delta"].as_u64(), v["diameter"].as_u64()),
        (Some(26), Some(9), Some(3))
    );

    let h = build_named("script_h").unwrap().canonical_code().to_hex();
    assert_eq!(
        stdout_json(&pentaplane(&["family", "--delta", "3"]))["canonical_code"],
        h
    );
    assert_eq!(code(&pentaplane(&["family", "--delta", "6"])), 1);

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g5.json");
    let o = pentaplane(&["family", "--delta", "5", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout_json(&o).get("graph").is_none());
    let g = io::parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 14);
}

fn dot_counts(text: &str) -> (usize, usize, usize) {
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    let faces = lines.iter().filter(|l| l.starts_with("// face")).count();
    let edges = lines.iter().filter(|l| l.contains(" -- ")).count();
    let nodes = lines
        .iter()
        .filter(|l| l.ends_with(';') && !l.contains("--"))
        .count();
    (nodes, edges, faces)
}

#[test]
fn export_formats() {
    let dir = TempDir::new().unwrap();
    let o = pentaplane(&["export", &write_fixture(&dir, "c5")]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("graph pentaplane {"));
    assert_eq!(dot_counts(&text), (5, 5, 2));

    let h = write_fixture(&dir, "script_h");
    let o = pentaplane(&["export", &h, "--format", "dot"]);
    assert_eq!(
        dot_counts(&String::from_utf8(o.stdout).unwrap()),
        (8, 10, 4)
    );

    let o = pentaplane(&["export", &h, "--format", "rotations"]);
    let back = io::parse_graph(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(back, build_named("script_h").unwrap());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 3, \"rotations\": [[1], [0]]}").unwrap();
    assert_eq!(code(&pentaplane(&["export", bad.to_str().unwrap()])), 1);
}

fn parse_lines(out: &[u8]) -> Vec<PlaneGraph> {
    String::from_utf8_lossy(out)
        .lines()
        .map(|l| io::from_json(l).unwrap())
        .collect()
}

#[test]
fn enumerate_streams_graphs() {
    let o = pentaplane(&["enumerate", "--max-n", "11"]);
    assert_eq!(code(&o), 0);
    let graphs = parse_lines(&o.stdout);
    assert_eq!(graphs.len(), 34);
    assert!(graphs.iter().all(PlaneGraph::is_pentagulation));

    let o = pentaplane(&[
        "enumerate",
        "--max-n",
        "11",
        "--diameter",
        "3",
        "--jobs",
        "2",
    ]);
    assert!(parse_lines(&o.stdout).len() < 34);
}

#[test]
fn enumerate_resumes_from_a_journal() {
    let dir = TempDir::new().unwrap();
    let journal = dir.path().join("run.jsonl");
    let j = journal.to_str().unwrap();
    let first = pentaplane(&["enumerate", "--max-n", "11", "--resume", j]);
    assert_eq!(code(&first), 0);
    assert!(Path::new(j).exists());
    let again = pentaplane(&["enumerate", "--max-n", "11", "--resume", j]);
    assert_eq!(first.stdout, again.stdout);
    let clash = pentaplane(&["enumerate", "--max-n", "8", "--resume", j]);
    assert_eq!(code(&clash), 1);
}

#[test]
fn cap_comes_from_the_environment() {
    let run = |cap: &str, max_n: &str| {
        Command::new(env!("CARGO_BIN_EXE_pentaplane"))
            .args(["enumerate", "--max-n", max_n])
            .env("PENTAPLANE_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("5", "8")), 1);
    assert_eq!(code(&run("8", "8")), 0);
    assert_eq!(code(&run("lots", "8")), 1);
}

#[test]
fn fixtures_and_usage() {
    let o = pentaplane(&["fixture"]);
    let names = String::from_utf8(o.stdout).unwrap();
    assert!(names.lines().any(|l| l == "script_h"));
    let o = pentaplane(&["fixture", "dodecahedron"]);
    assert_eq!(
        io::parse_graph(&String::from_utf8(o.stdout).unwrap())
            .unwrap()
            .vertex_count(),
        20
    );
    assert_eq!(code(&pentaplane(&["fixture", "petersen"])), 1);

    assert_eq!(code(&pentaplane(&["--help"])), 0);
    assert_eq!(code(&pentaplane(&["--version"])), 0);
    assert_eq!(code(&pentaplane(&["frobnicate"])), 1);
    assert_eq!(code(&pentaplane(&[])), 1);
}
