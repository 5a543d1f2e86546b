mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{fixture, Naive};
use serde_json::Value;
use tripoisson::cli::RunReport;
use tripoisson::io::{load, Document};
use tripoisson::Family;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripoisson"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is one JSON object");
    (out.status.code().unwrap(), v)
}

fn load_algebra(p: &Path) -> tripoisson::Algebra {
    match load(p).unwrap() {
        Document::Algebra(a) => a,
        Document::Double(d) => d.algebra,
        other => panic!("expected an algebra, got {}", other.kind()),
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&["validate", "fixtures/t3.alg", "--family", "transposed"]),
        0
    );
    assert_eq!(
        code(&["validate", "fixtures/t3.alg", "--family", "poisson"]),
        1
    );
    assert_eq!(code(&["validate", "fixtures/malformed.alg"]), 2);
    assert_eq!(code(&["validate", "fixtures/no-such-file.alg"]), 2);
    assert_eq!(
        code(&["verify", "fixtures/b4co.bundle", "--family", "admissible"]),
        0
    );
    assert_eq!(code(&["verify", "fixtures/b4co-perturbed.bundle"]), 1);
    assert_eq!(
        code(&["search", "fixtures/t3-search.tmpl", "--budget", "10"]),
        2
    );
    assert_eq!(code(&["forms", "fixtures/t3.alg"]), 1);
}

#[test]
fn failing_report_carries_witness() {
    let (c, v) = json(&["validate", "fixtures/t3.alg", "--family", "poisson"]);
    assert_eq!(c, 1);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["exit_code"], 1);
    let results = v["checks"][0]["report"]["results"].as_array().unwrap();
    let failed = results.iter().find(|r| r["pass"] == false).unwrap();
    assert_eq!(failed["law"], "poisson-leibniz");
    assert_eq!(failed["witness"]["tuple"], serde_json::json!([2, 2, 2, 3]));
}

#[test]
fn report_round_trips_and_reruns_are_identical() {
    let args = ["--json", "verify", "fixtures/b4co.bundle"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let report: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.to_json().trim_end(), text.trim_end());
    assert_eq!(report.exit_code, 0);
    assert!(report.verdict);
}

#[test]
fn digest_tracks_input_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.alg");
    let b = dir.path().join("b.alg");
    std::fs::copy(fixture("t3.alg"), &a).unwrap();
    std::fs::write(
        &b,
        std::fs::read_to_string(fixture("t3.alg"))
            .unwrap()
            .replace("\"-3\"", "\"-2\""),
    )
    .unwrap();
    let (_, va) = json(&["validate", a.to_str().unwrap(), "--family", "transposed"]);
    let (_, vb) = json(&["validate", b.to_str().unwrap(), "--family", "transposed"]);
    assert_ne!(va["inputs_digest"], vb["inputs_digest"]);
}

#[test]
fn double_output_is_an_admissible_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("double.alg");
    let c = code(&[
        "construct",
        "double",
        "fixtures/b4.alg",
        "fixtures/b4co.coalg",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    let d = load_algebra(&out);
    assert_eq!(d.dim(), 8);
    let o = Naive::of(&d);
    assert!(o.valid(Family::Admissible) && o.valid(Family::Poisson));
    assert_eq!(
        code(&["validate", out.to_str().unwrap(), "--family", "admissible"]),
        0
    );
}

#[test]
fn constructions_write_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let sum = dir.path().join("sum.alg");
    assert_eq!(
        code(&[
            "construct",
            "direct-sum",
            "fixtures/a4.alg",
            "fixtures/t3.alg",
            "-o",
            sum.to_str().unwrap()
        ]),
        0
    );
    assert_eq!(load_algebra(&sum).dim(), 7);

    let twist = dir.path().join("twist.alg");
    let c = code(&[
        "construct",
        "twist",
        "fixtures/t3.alg",
        "--h",
        "e1",
        "-o",
        twist.to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    let t = load_algebra(&twist);
    assert!(
        t.bracket().is_zero(),
        "e1 annihilates the T3 product, so the twist has zero bracket"
    );
    assert!(Naive::of(&t).valid(Family::Transposed));

    let dual = dir.path().join("dual.alg");
    assert_eq!(
        code(&[
            "dualize",
            "fixtures/b4co.coalg",
            "-o",
            dual.to_str().unwrap()
        ]),
        0
    );
    assert!(load_algebra(&dual).same_constants(&load_algebra(&fixture("b4co-dual.alg"))));
}

#[test]
fn search_emits_sound_candidates() {
    let (c, v) = json(&["search", "fixtures/t3-search.tmpl"]);
    assert_eq!(c, 0);
    let emitted = v["checks"][0]["emitted"].as_array().unwrap();
    assert!(!emitted.is_empty());
    let dir = tempfile::tempdir().unwrap();
    for (k, e) in emitted.iter().enumerate() {
        let p = dir.path().join(format!("{k}.alg"));
        std::fs::write(&p, e["algebra"].to_string()).unwrap();
        assert!(Naive::of(&load_algebra(&p)).valid(Family::Transposed));
    }
}

#[test]
fn text_mode_and_stderr() {
    let out = run(&["validate", "fixtures/malformed.alg"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line"), "parse errors name a position: {err}");
    let ok = run(&["validate", "fixtures/t3.alg", "--family", "transposed"]);
    assert!(String::from_utf8(ok.stdout).unwrap().contains("PASS"));
}
