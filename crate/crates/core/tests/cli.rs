use std::path::PathBuf;
use std::process::{Command, Output};

use widthlab::dsl::{parse_word, validate_report_json};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_widthlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("widthlab-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn width_of_presets() {
    let o = run(&["width", "--preset", "trefoil-plat"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("width 8"), "{}", stdout(&o));
}

#[test]
fn json_reports_validate() {
    for args in [
        &["width", "--preset", "stacked", "--json"][..],
        &["levels", "--preset", "stacked", "--json"],
        &["boxes", "--preset", "trefoil-plat", "--json"],
        &["move", "--preset", "unlink-nested", "--exchange", "2", "--json"],
        &["orbit", "--preset", "unlink-nested", "--json"],
        &["cdisk", "--preset", "cdisk-clean", "--theorem", "--json"],
        &["cdisk", "--preset", "cdisk-fact4", "--chain", "--json"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        validate_report_json(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn certificate_exits_two() {
    let o = run(&["cdisk", "--preset", "cdisk-fact1", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    validate_report_json(&text).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["certificate"]["total_delta"], -4);

    let clean = run(&["cdisk", "--preset", "cdisk-clean", "--certify"]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn errors_exit_one() {
    let o = run(&["move", "--preset", "trefoil-plat", "--exchange", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overlapping supports"));

    assert_eq!(run(&["width", "--preset", "no-such-preset"]).status.code(), Some(1));

    let dir = scratch_dir("bad");
    let path = dir.join("bad.morse");
    std::fs::write(&path, "link\ncup 0\ncap 1\n").unwrap();
    let o = run(&["width", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("3:1"), "{err}");
    assert!(err.contains("^^^^^"), "{err}");
}

#[test]
fn orbit_writes_witness_beside_input() {
    let dir = scratch_dir("orbit");
    let path = dir.join("nested.morse");
    std::fs::write(&path, "link\ncup 0\ncup 2\ncap 0\ncap 0\n").unwrap();
    let o = run(&["orbit", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let witness = std::fs::read_to_string(dir.join("nested.min.morse")).unwrap();
    let w = parse_word(&witness).unwrap();
    assert_eq!(widthlab::morse::width(&w), 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn push_reports_trace() {
    let o = run(&["move", "--preset", "unlink-nested", "--push", "3..3", "down", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["width"], 4);
    assert_eq!(v["moves"].as_array().unwrap().len(), 1);
}

#[test]
fn presets_listing() {
    let o = run(&["presets"]);
    let text = stdout(&o);
    for name in ["unknot", "stacked", "cdisk-fact4"] {
        assert!(text.contains(name));
    }
}
