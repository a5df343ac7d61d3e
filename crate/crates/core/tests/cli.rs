use std::path::PathBuf;
use std::process::{Command, Output};

use semifree::actions5::ActionDescriptor5;
use semifree::manifolds::FiveManifoldDesc;

fn semifree(args: &[&str], depth_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_semifree"));
    cmd.args(args).env_remove("SEMIFREE_DEPTH");
    if let Some(d) = depth_env {
        cmd.env("SEMIFREE_DEPTH", d);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("semifree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify5_cp2() {
    let o = semifree(&["classify5", "--orbit", "CP2", "--n", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("total space: S3x~S2 (Theorem A)"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn obstruct8_cp4_exits_two() {
    let o = semifree(&["obstruct8", "CP4"], None);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(
        out.contains("C2 FAIL") && out.contains("χ=5") && out.contains("Theorem C(2)"),
        "{out}"
    );
}

#[test]
fn obstruct8_batch_mixes_verdicts() {
    let o = semifree(&["obstruct8", "S8", "#2(S4xS4)"], None);
    assert_eq!(o.status.code(), Some(0));
    let o = semifree(&["obstruct8", "S8", "SU3", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"][1]["report"]["verdict"], "OBSTRUCTED");
}

#[test]
fn equiv_file_with_itself_is_identity() {
    let a = temp_file("a.json", r#"{"orbit": "S2xS2", "n": 2, "ebar": [1, 3]}"#);
    let a = a.to_str().unwrap();
    let o = semifree(&["equiv", a, a, "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "EQUIVALENT_WITNESSED");
    assert_eq!(v["witness"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn equiv_negative_exit_code_independent_of_format() {
    let a = r#"{"orbit":"CP2","n":1,"ebar":[3]}"#;
    let b = r#"{"orbit":"CP2","n":1,"ebar":[5]}"#;
    for fmt in ["text", "json"] {
        let o = semifree(&["equiv", a, b, "--format", fmt], None);
        assert_eq!(o.status.code(), Some(2));
    }
}

#[test]
fn depth_flag_wins_over_environment() {
    let a = r#"{"orbit":"CP2","n":1,"ebar":[3]}"#;
    let o = semifree(&["equiv", a, a, "--format", "json"], Some("4"));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["depth"], 4);
    let o = semifree(
        &["equiv", a, a, "--depth", "2", "--format", "json"],
        Some("4"),
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["depth"], 2);
    let o = semifree(&["equiv", a, a], Some("zero"));
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("SEMIFREE_DEPTH"));
}

#[test]
fn input_errors_exit_one_and_name_the_field() {
    let cases: [(&[&str], &str); 5] = [
        (&["classify5", "--orbit", "K3", "--n", "1"], "orbit"),
        (&["classify5", "--orbit", "CP2", "--n", "0"], "n:"),
        (
            &["classify5", "--orbit", "CP2", "--n", "1", "--ebar", "1,2"],
            "ebar",
        ),
        (
            &["equiv", r#"{"orbit":"CP2","n":1}"#, r#"{"orbit":"CP2"}"#],
            "second",
        ),
        (&["obstruct8", r#"{"H2":0}"#], "manifolds[0]"),
    ];
    for (args, field) in cases {
        let o = semifree(args, None);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).contains(field), "{args:?}: {}", stderr(&o));
    }
    let o = semifree(&["equiv", "{not json", "S4"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(semifree(&["nonsense"], None).status.code(), Some(1));
}

#[test]
fn json_output_round_trips() {
    let o = semifree(
        &[
            "construct",
            "connsum5",
            r#"{"orbit":"CP2","n":2,"ebar":[1]}"#,
            r#"{"orbit":"S2xS2","n":1,"ebar":[0,2]}"#,
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let action: ActionDescriptor5 = serde_json::from_value(v["action"].clone()).unwrap();
    assert_eq!(action.n(), 2);
    assert_eq!(serde_json::to_value(&action).unwrap(), v["action"]);
    let total: FiveManifoldDesc = serde_json::from_value(v["total_space"].clone()).unwrap();
    assert_eq!(total.label(), "(S3x~S2)##3(S3xS2)");
}

#[test]
fn remaining_verbs() {
    let o = semifree(&["cohom5", "--orbit", "S2xS2", "--n", "2"], None);
    assert!(stdout(&o).contains("H3(M) = H2(M) = Z^3"));
    let o = semifree(&["counts", "#3(S3xS2)"], None);
    assert!(stdout(&o).contains("2, 4"));
    let o = semifree(&["cohom8", "--orbit", "S3xS2", "--n", "2"], None);
    assert!(stdout(&o).contains("H4(M) = 0 (Lemma 5.3)"));
    let o = semifree(
        &[
            "construct",
            "torusquot",
            "--family",
            "nonspin",
            "--a",
            "-3",
            "--b",
            "1",
        ],
        None,
    );
    assert!(stdout(&o).contains("w2 = 1"));
    let o = semifree(
        &[
            "construct",
            "torusquot",
            "--family",
            "spin",
            "--a",
            "1",
            "--b",
            "0",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    let o = semifree(&["construct", "connsum8", "4", "4"], None);
    assert!(stdout(&o).contains("fixed points: 6"));
    let o = semifree(
        &[
            "construct",
            "fibresum",
            "--base",
            "CP2",
            r#"{"orbit":"S4","n":1}"#,
        ],
        None,
    );
    assert!(stdout(&o).contains("total space: S3x~S2"));
    let o = semifree(&["--catalog-list"], None);
    assert!(stdout(&o).contains("SU3") && stdout(&o).contains("E8"));
}
