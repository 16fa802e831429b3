use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ris-connect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn rich_config(dir: &Path) -> String {
    let config = dir.join("config.json");
    std::fs::write(
        &config,
        r#"{ "num_ue": 4, "num_uav": 5, "gamma0_ris": 0.0 }"#,
    )
    .unwrap();
    path(&config).to_owned()
}

#[test]
fn simulate_reports_every_scheme() {
    let dir = tempfile::tempdir().unwrap();
    let config = rich_config(dir.path());
    let out = run(&[
        "simulate",
        "--config",
        &config,
        "--seed",
        "7",
        "--phase-mode",
        "cophase",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let schemes: Vec<&str> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["scheme"].as_str().unwrap())
        .collect();
    assert_eq!(
        schemes,
        ["original", "random", "linear", "sdp", "exhaustive"]
    );
}

#[test]
fn solve_prints_the_documented_fields() {
    let dir = tempfile::tempdir().unwrap();
    let config = rich_config(dir.path());
    let out_file = dir.path().join("solve.json");
    let out = run(&[
        "solve",
        "--config",
        &config,
        "--seed",
        "3",
        "--scheme",
        "sdp",
        "--phase-mode",
        "cophase",
        "--out",
        path(&out_file),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let result: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let mut keys: Vec<&str> = result
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "chosen_uav",
            "chosen_ue",
            "iterations",
            "lambda2_after",
            "lambda2_before",
            "relaxation_value",
            "scheme"
        ]
    );
    assert_eq!(result["scheme"], "sdp");
    assert!(
        result["lambda2_after"].as_f64().unwrap() >= result["lambda2_before"].as_f64().unwrap()
    );
}

#[test]
fn exported_graph_feeds_back_into_solve() {
    let dir = tempfile::tempdir().unwrap();
    let config = rich_config(dir.path());
    let graph = dir.path().join("graph.txt");
    let common = [
        "--config",
        &config,
        "--seed",
        "5",
        "--phase-mode",
        "cophase",
    ];

    let mut args = vec![
        "solve",
        "--scheme",
        "exhaustive",
        "--export-graph",
        path(&graph),
    ];
    args.extend(common);
    let direct = run(&args);
    assert!(direct.status.success());
    let text = std::fs::read_to_string(&graph).unwrap();
    assert!(text.lines().next().unwrap().split_whitespace().count() == 2);
    assert_eq!(
        text.lines().next().unwrap().split_whitespace().next(),
        Some("9")
    );

    let mut args = vec!["solve", "--scheme", "exhaustive", "--graph", path(&graph)];
    args.extend(common);
    let replayed = run(&args);
    assert!(replayed.status.success());
    assert_eq!(direct.stdout, replayed.stdout);
}

#[test]
fn linear_scheme_with_ue() {
    let dir = tempfile::tempdir().unwrap();
    let config = rich_config(dir.path());
    let out = run(&[
        "solve",
        "--config",
        &config,
        "--scheme",
        "linear",
        "--ue",
        "2",
        "--phase-mode",
        "cophase",
    ]);
    assert!(out.status.success());
    let result: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(result["chosen_ue"].is_null() || result["chosen_ue"] == 2);

    let missing = run(&["solve", "--config", &config, "--scheme", "linear"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = rich_config(dir.path());
    let csv = dir.path().join("sweep.csv");
    let out = run(&[
        "sweep-snr",
        "--config",
        &config,
        "--iterations",
        "3",
        "--values",
        "0,20",
        "--schemes",
        "original,exhaustive",
        "--out",
        path(&csv),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "scheme,swept_parameter,swept_value,mean_lambda2,std_lambda2,iterations,fraction_noop"
    );
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("original,gamma0_ris,0.00000000,"));

    let stdout = run(&[
        "sweep-ue",
        "--config",
        &config,
        "--iterations",
        "2",
        "--values",
        "2,3",
        "--schemes",
        "original",
    ]);
    assert!(stdout.status.success());
    assert_eq!(String::from_utf8(stdout.stdout).unwrap().lines().count(), 3);
}

#[test]
fn configuration_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{ "num_ue": 0 }"#).unwrap();
    assert_eq!(
        run(&["simulate", "--config", path(&bad)]).status.code(),
        Some(2)
    );

    let unknown = dir.path().join("unknown.json");
    std::fs::write(&unknown, r#"{ "no_such_key": 1 }"#).unwrap();
    assert_eq!(
        run(&["simulate", "--config", path(&unknown)]).status.code(),
        Some(2)
    );

    assert_eq!(run(&["solve", "--scheme", "bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["simulate", "--phase-mode", "sideways"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["sweep-uav", "--values", "3,2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn io_errors_exit_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(&["simulate", "--config", path(&missing)]).status.code(),
        Some(3)
    );

    let unwritable = dir.path().join("no-such-dir").join("out.json");
    assert_eq!(
        run(&["simulate", "--out", path(&unwritable)]).status.code(),
        Some(3)
    );

    let csv = dir.path().join("no-such-dir").join("out.csv");
    let out = run(&[
        "sweep-uav",
        "--iterations",
        "1",
        "--values",
        "2",
        "--schemes",
        "original",
        "--out",
        path(&csv),
    ]);
    assert_eq!(out.status.code(), Some(3));
}
