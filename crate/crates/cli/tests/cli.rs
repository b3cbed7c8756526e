use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_activity-vec"))
        .args(args)
        .output()
        .expect("spawn activity-vec")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn vectorize_paper_display_prints_table_digits() {
    let jsonl = data("fixture.jsonl");
    let out = run(&["vectorize", "--input", path(&jsonl), "--display", "paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "object,UID1,UID2,UID3,UID4,UID5,UID6\n\
         d1,1.584,0.584,0.584,0,0,0\n\
         d2,0,0.584,0.584,0.584,0,0\n\
         d3,0,0,0,0.584,1.584,1.584\n"
    );
}

#[test]
fn vectorize_show_idf_and_default_display() {
    let csv = data("fixture.csv");
    let out = run(&["vectorize", "--input", path(&csv), "--show-idf"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("d1,1.584963,0.584963,0.584963,0,0,0\n"));
    let idf = stderr(&out);
    assert!(idf.contains("idf UID1 = 1.584963"));
    assert!(idf.contains("idf UID4 = 0.584963"));
}

#[test]
fn raw_count_equals_binary_on_fixture() {
    let csv = data("fixture.csv");
    let binary = run(&["vectorize", "--input", path(&csv)]);
    let raw = run(&["vectorize", "--input", path(&csv), "--tf-mode", "raw_count"]);
    assert_eq!(raw.status.code(), Some(0));
    assert_eq!(binary.stdout, raw.stdout);
}

#[test]
fn jsonl_and_csv_inputs_agree() {
    let a = run(&[
        "stats",
        "--input",
        path(&data("fixture.jsonl")),
        "--porcelain",
    ]);
    let b = run(&[
        "stats",
        "--input",
        path(&data("fixture.csv")),
        "--porcelain",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn missing_input_exits_2() {
    let out = run(&["vectorize", "--input", "/nonexistent/activity.jsonl"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn stats_panel_labels() {
    let out = run(&["stats", "--input", path(&data("fixture.jsonl"))]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "Diameter: 6\nRadius: 3\nAverage Path length: 2.7222\nNumber of shortest paths: 72\n\
         Average Weighted Degree: 1.8366\nGraph Density: 0.250\nComponents: 1\n"
    );
}

#[test]
fn stats_porcelain() {
    let out = run(&[
        "stats",
        "--input",
        path(&data("fixture.csv")),
        "--porcelain",
    ]);
    let text = stdout(&out);
    let get = |key: &str| -> String {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key}=")))
            .unwrap_or_else(|| panic!("missing {key}"))
            .to_owned()
    };
    assert_eq!(get("diameter"), "6");
    assert_eq!(get("radius"), "3");
    assert_eq!(get("number_of_shortest_paths"), "72");
    assert_eq!(get("graph_density"), "0.25");
    assert_eq!(get("components"), "1");
    let apl: f64 = get("average_path_length").parse().unwrap();
    assert!((apl - 196.0 / 72.0).abs() < 1e-12);
    let awd: f64 = get("average_weighted_degree").parse().unwrap();
    assert!((1.834..=1.837).contains(&awd));
}

#[test]
fn stats_with_threshold_counts_components() {
    let out = run(&[
        "stats",
        "--input",
        path(&data("fixture.jsonl")),
        "--threshold",
        "1.0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Components: 2\n"), "{}", stdout(&out));
    let kept = run(&[
        "stats",
        "--input",
        path(&data("fixture.jsonl")),
        "--threshold",
        "1.0",
        "--keep-isolated",
    ]);
    assert!(
        stdout(&kept).contains("Components: 6\n"),
        "{}",
        stdout(&kept)
    );
}

#[test]
fn single_record_is_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("one.jsonl");
    std::fs::write(&input, "{\"object\":\"d1\",\"actor\":\"UID1\"}\n").unwrap();
    let out = run(&["stats", "--input", path(&input)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr(&out).contains("statistics undefined"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn empty_corpus_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.csv");
    std::fs::write(&input, "object_id,actor_id,count\n").unwrap();
    for cmd in ["vectorize", "stats", "export"] {
        let out = run(&[cmd, "--input", path(&input)]);
        assert_eq!(out.status.code(), Some(3), "{cmd}");
    }
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    std::fs::write(&input, "object_id,actor_id,count\nd1,UID1,zero\n").unwrap();
    let out = run(&["vectorize", "--input", path(&input)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));

    let other = dir.path().join("log.txt");
    std::fs::write(&other, "").unwrap();
    assert_eq!(
        run(&["vectorize", "--input", path(&other)]).status.code(),
        Some(2)
    );
    let forced = run(&["vectorize", "--input", path(&input), "--format", "jsonl"]);
    assert_eq!(forced.status.code(), Some(2));
}

#[test]
fn export_gexf_reports_counts() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("graph.gexf");
    let out = run(&[
        "export",
        "--input",
        path(&data("fixture.jsonl")),
        "--format",
        "gexf",
        "--output",
        path(&target),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("9 nodes / 9 edges"));
    let xml = std::fs::read_to_string(&target).unwrap();
    assert!(xml.contains("xmlns=\"http://www.gexf.net/1.2draft\""));
    assert_eq!(xml.matches("<edge ").count(), 9);
}

#[test]
fn export_formats() {
    let input = data("fixture.csv");
    let dot = run(&["export", "--input", path(&input), "--format", "dot"]);
    assert_eq!(dot.status.code(), Some(0));
    assert!(stdout(&dot).starts_with("graph G {\n"));
    assert_eq!(stdout(&dot).matches(" -- ").count(), 9);

    let filtered = run(&[
        "export",
        "--input",
        path(&input),
        "--format",
        "gexf",
        "--threshold",
        "1.0",
    ]);
    assert!(
        stderr(&filtered).contains("5 nodes / 3 edges"),
        "{}",
        stderr(&filtered)
    );

    let edges = run(&["export", "--input", path(&input), "--format", "edge-csv"]);
    assert_eq!(stdout(&edges).lines().count(), 10);

    let corpus = run(&[
        "export",
        "--input",
        path(&data("fixture.jsonl")),
        "--format",
        "corpus-csv",
    ]);
    assert_eq!(stdout(&corpus), std::fs::read_to_string(&input).unwrap());

    let unknown = run(&["export", "--input", path(&input), "--format", "png"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let input = data("fixture.jsonl");
    let cases: [&[&str]; 5] = [
        &["vectorize", "--input", path(&input)],
        &["stats", "--input", path(&input), "--porcelain"],
        &["export", "--input", path(&input), "--format", "gexf"],
        &["export", "--input", path(&input), "--format", "dot"],
        &["export", "--input", path(&input), "--format", "edge-csv"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.contains(&b'\r'));
    }
}
