use std::path::Path;
use std::process::{Command, Output};

use sweepcover_cli::output::{table_from_csv, table_from_json};

fn sweepcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sweepcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn enumerate_star() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.txt", "r a\nr b\n");

    let out = sweepcover(&["enumerate", "--tree", &star, "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[[a],[b]]\n");

    let out = sweepcover(&["enumerate", "--tree", &star, "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!([[["a", "b"]], [["r"]]]));

    let out = sweepcover(&["enumerate", "--tree", &star, "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "a b c\n");
    let forest = write(dir.path(), "forest.txt", "a b\nc d\n");
    let star = write(dir.path(), "star.txt", "r a\nr b\n");

    for tree in [&bad, &forest] {
        let out = sweepcover(&["enumerate", "--tree", tree, "--n", "1"]);
        assert_eq!(out.status.code(), Some(2));
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let missing = dir.path().join("missing.txt");
    let out = sweepcover(&["enumerate", "--tree", missing.to_str().unwrap(), "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(
        sweepcover(&["enumerate", "--tree", &star, "--n", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        sweepcover(&["enumerate", "--tree", &star]).status.code(),
        Some(3)
    );
    assert_eq!(
        sweepcover(&["count", "--delta", "1", "--n", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        sweepcover(&["count", "--delta", "3", "--n", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        sweepcover(&["table", "--delta-range", "9..2", "--n-max", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        sweepcover(&["table", "--n-max", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(
        sweepcover(&["discrepancy", "--delta", "1", "--n-max", "2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(sweepcover(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_cells() {
    let out = sweepcover(&["table", "--delta-range", "3..3", "--n-range", "5..5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().nth(1).unwrap().ends_with("174"));

    let out = sweepcover(&[
        "table",
        "--delta",
        "2",
        "--n-range",
        "1",
        "--gamma",
        "7",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "delta,1\n2,8\n");

    let out = sweepcover(&["count", "--delta", "9", "--n", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], "2446230617955");
}

#[test]
fn table_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("t.json");
    let csv = dir.path().join("t.csv");
    let args = ["table", "--delta-range", "2..9", "--n-range", "1..8"];
    let mut a = args.to_vec();
    a.extend(["--format", "json", "--out", json.to_str().unwrap()]);
    assert_eq!(sweepcover(&a).status.code(), Some(0));
    let mut b = args.to_vec();
    b.extend(["--format", "csv", "--out", csv.to_str().unwrap()]);
    assert_eq!(sweepcover(&b).status.code(), Some(0));

    let from_json = table_from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let from_csv = table_from_csv(&std::fs::read_to_string(&csv).unwrap(), 0).unwrap();
    assert_eq!(from_json, from_csv);
    assert_eq!(from_json.get(8, 8).unwrap().to_string(), "136772884789");
    assert_eq!(from_json.get(5, 5).unwrap().to_string(), "11376");
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let tree = write(
        dir.path(),
        "t.txt",
        "r x\nr y\nr z\nx u\nx v\ny w\nw p\nw q\n",
    );
    let runs = [
        vec!["enumerate", "--tree", &tree, "--n", "3", "--format", "json"],
        vec![
            "table",
            "--delta-range",
            "2..6",
            "--n-max",
            "6",
            "--format",
            "csv",
        ],
        vec!["oracle-check", "--max-nodes", "5", "--n-max", "4"],
        vec![
            "discrepancy",
            "--delta",
            "2",
            "--n-max",
            "3",
            "--star-levels",
            "4",
        ],
    ];
    for args in &runs {
        let first = sweepcover(args);
        let second = sweepcover(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn oracle_check_small() {
    let out = sweepcover(&["oracle-check", "--max-nodes", "5", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("all "), "{}", stdout(&out));
    assert!(stdout(&out).contains("tree/size pairs match"));

    let out = sweepcover(&[
        "oracle-check",
        "--max-nodes",
        "1",
        "--n-max",
        "1",
        "--random-trees",
        "0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (v["trees"].as_u64(), v["pairs"].as_u64()),
        (Some(1), Some(1))
    );
    assert_eq!(v["all_match"], true);
}

#[test]
fn discrepancy_rows() {
    let out = sweepcover(&[
        "discrepancy",
        "--delta",
        "2",
        "--gamma",
        "0",
        "--n-max",
        "2",
        "--star-levels",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["recurrence_count"], "1");
    assert_eq!(v[1]["recurrence_count"], "1");
    // brute force and the enumerator agree on the truncation itself
    for row in v.as_array().unwrap() {
        assert_eq!(
            row["truncated_brute_force_count"],
            row["truncated_algorithm_count"]
        );
    }
}

#[test]
fn validate_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.txt", "r a\nr b\n");
    let good = write(dir.path(), "good.json", r#"[["a"],["b"]]"#);
    let bad = write(dir.path(), "bad.json", r#"[["a"],["r"]]"#);
    let garbage = write(dir.path(), "garbage.json", "not json");
    let stranger = write(dir.path(), "stranger.json", r#"[["zz"]]"#);

    let out = sweepcover(&[
        "validate", "--tree", &star, "--cover", &good, "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], true);

    let out = sweepcover(&[
        "validate", "--tree", &star, "--cover", &bad, "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["condition"], "no-ancestry");

    for cover in [&garbage, &stranger] {
        let out = sweepcover(&["validate", "--tree", &star, "--cover", cover]);
        assert_eq!(out.status.code(), Some(2));
    }
}

#[test]
fn reports_render_in_every_format() {
    for format in ["text", "json", "csv"] {
        for args in [
            vec!["bound-report", "--delta", "3", "--n-max", "4"],
            vec!["growth-report", "--delta", "3", "--n-max", "4"],
        ] {
            let mut args = args.clone();
            args.extend(["--format", format]);
            let out = sweepcover(&args);
            assert_eq!(out.status.code(), Some(0), "{args:?}");
            assert!(!out.stdout.is_empty());
        }
    }
    let out = sweepcover(&["growth-report", "--delta", "3", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(3));
}
