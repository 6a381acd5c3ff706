use std::collections::BTreeSet;
use std::process::{Command, Output};

use qcy_cli::report::Report;

fn qcy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcy")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_four_cycle_table() {
    let out = qcy(&["classify", "--perm", "four", "--s", "3", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).collect();
    assert_eq!(rows.len(), 7, "{text}");
    assert!(rows.iter().all(|r| r.contains("C(")));
    assert!(text.contains("diffs vs golden: 0"));
    let empty = stdout(&qcy(&["classify", "--perm", "four", "--s", "4"]));
    assert!(empty.starts_with("perm four  s 4  stage full"));
    assert!(empty.contains("candidates 0"));
}

#[test]
fn json_and_table_list_the_same_candidates() {
    for (perm, s) in [("four", "3"), ("three", "3"), ("two-two", "3"), ("two-two", "4")] {
        let json = stdout(&qcy(&["classify", "--perm", perm, "--s", s, "--format", "json"]));
        let report: Report = serde_json::from_str(&json).unwrap();
        let from_json: BTreeSet<String> =
            report.candidates.iter().map(|c| qcy_core::typealg::text::format_matrix(&c.m)).collect();
        let table = stdout(&qcy(&["classify", "--perm", perm, "--s", s]));
        let from_table: BTreeSet<String> = table
            .lines()
            .take_while(|l| !l.starts_with("ruled out"))
            .filter(|l| l.trim_start().starts_with(char::is_numeric))
            .map(|l| l.split_whitespace().nth(2).unwrap().to_string())
            .collect();
        assert_eq!(from_json, from_table, "{perm} s={s}");
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", json);
    }
}

#[test]
fn json_schema_keys() {
    let json = stdout(&qcy(&["classify", "--perm", "three", "--s", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["perm_class"], "three");
    assert_eq!(v["s"], 3);
    assert_eq!(v["stage"], "full");
    let c = &v["candidates"][0];
    for key in ["M", "P", "filters", "realization", "starred"] {
        assert!(c.get(key).is_some(), "missing {key}");
    }
    assert_eq!(c["P"], "cycles:(1 3 2)");
    assert_eq!(c["M"].as_array().unwrap().len(), 4);
}

#[test]
fn check_single_type() {
    let out = qcy(&[
        "check", "--M", "0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0", "--P", "cycles:(1 2)(3 4)", "--s", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["strongly_connected"], false);
    assert_eq!(v["spectral_radius_is_target"], false);
    assert_eq!(v["palindromicity"], "palindromic");
}

#[test]
fn gamma_table_for_s4() {
    let text = stdout(&qcy(&["gamma-table", "--s", "4"]));
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0], "(0,0)   8");
    assert_eq!(rows[6], "(3,1)   -2");
}

#[test]
fn construct_subcommands() {
    let mckay = qcy(&["construct", "mckay", "--group", "klein4_xyz", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&mckay.stdout).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["type"]["M"], serde_json::json!([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]));

    let ore = stdout(&qcy(&[
        "construct", "ore", "--M", "1,0,0,1;0,1,1,0;1,0,1,0;0,1,0,1", "--P", "0,0,1,0;0,0,0,1;0,1,0,0;1,0,0,0",
        "--Pprime", "cycles:(3 4)",
    ]));
    assert!(ore.contains("output (M=2,0,0,1;0,2,1,0;1,0,1,1;0,1,1,1, P=cycles:(1 4)(2 3), s=3)"), "{ore}");

    let twist = stdout(&qcy(&["construct", "twist", "--group", "a4", "--char", "tau_omega"]));
    assert!(twist.contains("output (M=0,0,0,1;0,0,0,1;0,0,0,1;1,1,1,2, P=cycles:(1 3 2), s=3)"), "{twist}");

    let dir = std::env::temp_dir().join(format!("qcy-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("klein.grp");
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/groups/klein4_xyz.grp");
    std::fs::copy(root, &path).unwrap();
    let from_file = qcy(&["construct", "mckay", "--group", path.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&qcy(&["construct", "mckay", "--group", "klein4_xyz"])));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_paper_is_deterministic() {
    let a = qcy(&["verify-paper"]);
    let b = qcy(&["verify-paper"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    assert!(matches!(a.status.code(), Some(0) | Some(1)));
    let text = stdout(&a);
    for n in [1, 2, 3, 4, 5, 7] {
        assert!(text.contains(&format!("criterion {n}: ")), "criterion {n} missing");
    }
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let cases: [&[&str]; 5] = [
        &["classify", "--perm", "four"],
        &["classify", "--perm", "four", "--s", "5"],
        &["check", "--M", "0,0;1", "--P", "cycles:()", "--s", "3"],
        &["check", "--M", "0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0", "--P", "1,1,0,0;0,0,1,0;0,0,0,1;1,0,0,0", "--s", "3"],
        &["construct", "mckay", "--group", "no_such_group"],
    ];
    for args in cases {
        let out = qcy(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn golden_dir_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_qcy"))
        .arg("verify-paper")
        .env(qcy_cli::golden::GOLDEN_ENV, "/nonexistent/golden")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/golden"));
}
