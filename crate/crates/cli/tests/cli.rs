//! Black-box tests of the binary: exit-code contract, output shapes, and
//! byte-level determinism of the JSON mode.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_dimdatum")
}

fn config_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("configs")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn datum_table_matches_the_torus_values() {
    let cfg = config_path("a1.json");
    let out = run(&["datum", "--config", cfg.to_str().unwrap(), "--name", "t"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert_eq!(
        last.split_whitespace().collect::<Vec<_>>(),
        vec!["2", "3", "1"]
    );
}

#[test]
fn datum_accepts_truncation_zero() {
    let cfg = config_path("a1.json");
    let out = run(&[
        "datum",
        "--config",
        cfg.to_str().unwrap(),
        "--name",
        "identity",
        "--truncation",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(
        rows[0].split_whitespace().collect::<Vec<_>>(),
        vec!["0", "1", "1"]
    );
}

#[test]
fn malformed_config_exits_two_with_byte_offset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"group\": ]\n}").unwrap();
    let out = run(&["datum", "--config", path.to_str().unwrap(), "--name", "t"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte offset"), "stderr: {err}");
}

#[test]
fn unknown_subgroup_exits_two() {
    let cfg = config_path("a1.json");
    let out = run(&["datum", "--config", cfg.to_str().unwrap(), "--name", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corrupted_descriptor_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bogus.json");
    std::fs::write(
        &path,
        r#"{
  "group": {"factors": [{"type": "A", "rank": 1}]},
  "truncation": 8,
  "subgroups": {
    "bogus": {
      "kind": "finite_classes",
      "atoms": [
        {"angles": ["0"], "mass": "1/2"},
        {"angles": ["1/3"], "mass": "1/2"}
      ]
    }
  }
}"#,
    )
    .unwrap();
    let out = run(&[
        "datum",
        "--config",
        path.to_str().unwrap(),
        "--name",
        "bogus",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a nonnegative integer"), "stderr: {err}");
}

#[test]
fn limit_family_of_one_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("single.json");
    std::fs::write(
        &path,
        r#"{
  "group": {"factors": [{"type": "A", "rank": 1}]},
  "truncation": 8,
  "families": {"single": {"members": [{"catalog": "cyclic", "range": [2, 2]}]}}
}"#,
    )
    .unwrap();
    let out = run(&[
        "limit",
        "--config",
        path.to_str().unwrap(),
        "--name",
        "single",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn alternating_family_is_a_negative_verdict() {
    let cfg = config_path("a1.json");
    let out = run(&[
        "limit",
        "--config",
        cfg.to_str().unwrap(),
        "--name",
        "alternating",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not stabilized at 2"));
}

#[test]
fn separate_equal_subgroups_is_a_negative_verdict() {
    let cfg = config_path("a1.json");
    let out = run(&[
        "separate",
        "--config",
        cfg.to_str().unwrap(),
        "z4",
        "z4",
        "--truncation",
        "48",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("none found"));
}

#[test]
fn isospec_equal_pair_is_affirmative() {
    let cfg = config_path("a1.json");
    let out = run(&[
        "isospec",
        "--config",
        cfg.to_str().unwrap(),
        "z2",
        "z2_inline",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn catalog_lists_entries() {
    let cfg = config_path("a1.json");
    let out = run(&["catalog", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in [
        "trivial",
        "maximal_torus",
        "cyclic",
        "binary_dihedral",
        "binary_tetrahedral",
        "binary_octahedral",
        "binary_icosahedral",
        "torus_normalizer",
        "principal_a1_in_a2",
    ] {
        assert!(text.contains(name), "missing {name} in:\n{text}");
    }
    // The A2-only entry reports its requirement against an A1 config.
    let principal_row = text
        .lines()
        .find(|l| l.starts_with("principal_a1_in_a2"))
        .unwrap();
    assert!(principal_row.contains("needs ambient group"));
}

#[test]
fn json_mode_is_newline_terminated_and_deterministic() {
    let cfg = config_path("a1.json");
    let cfg = cfg.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["datum", "--config", cfg, "--name", "z4", "--format", "json"],
        vec![
            "limit",
            "--config",
            cfg,
            "--name",
            "cyclic_family",
            "--format",
            "json",
        ],
        vec![
            "separate",
            "--config",
            cfg,
            "z2",
            "z4",
            "--format",
            "json",
            "--truncation",
            "48",
        ],
        vec![
            "spectrum", "--config", cfg, "--name", "nt", "--format", "json",
        ],
        vec![
            "isospec", "--config", cfg, "identity", "z2", "--format", "json",
        ],
        vec!["catalog", "--config", cfg, "--format", "json"],
    ];
    for args in invocations {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(first.stdout.ends_with(b"\n"), "{args:?}");
        let line = String::from_utf8(first.stdout.clone()).unwrap();
        serde_json::from_str::<serde_json::Value>(line.trim_end()).expect("valid JSON");
    }
}

#[test]
fn datum_json_round_trips_through_serde() {
    let cfg = config_path("a2.json");
    let out = run(&[
        "datum",
        "--config",
        cfg.to_str().unwrap(),
        "--name",
        "principal",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let vector: dimdatum_core::DatumVector = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(vector.subgroup, "principal");
    assert_eq!(
        serde_json::to_string(&vector).unwrap(),
        stdout(&out).trim_end()
    );
}
