use std::process::{Command, Output};

use dnbranch::io::{parse_json, Payload};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dnbranch(cache: &std::path::Path, args: &[&str]) -> Run {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_dnbranch"))
        .args(args)
        .env("DNBRANCH_CACHE", cache)
        .output()
        .expect("binary runs");
    Run {
        code: status.code().expect("exit code"),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    let dir = tempfile::tempdir().unwrap();
    dnbranch(dir.path(), args)
}

#[test]
fn lattice_dot_contains_example_vertex() {
    let r = run(&["lattice", "--e", "4", "--n", "5", "--format", "dot"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("digraph lattice {"));
    assert!(r.stdout.contains("\"1|2,2\""));
}

#[test]
fn lattice_text_level_two() {
    let r = run(&["lattice", "--e", "inf", "--n", "2", "--format", "text"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("# e=inf regime=A l=inf n=2\n"));
    assert!(r.stdout.contains("level 2: 5 vertices"));
}

#[test]
fn invalid_e_is_usage_error() {
    let r = run(&["lattice", "--e", "1", "--n", "3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("invalid quantum characteristic"));
}

#[test]
fn bipartition_parse_error_reports_column() {
    let r = run(&["dims", "--bipartition", "2,1|1,x"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("column 7"), "{}", r.stderr);
}

#[test]
fn branch_semisimple_examples() {
    let r = run(&["branch", "--e", "inf", "--n", "5", "--bipartition", "2,1|1,1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("= D(1|2,1) ⊕ D+(1,1|1,1) ⊕ D-(1,1|1,1) ⊕ D(1,1|2)"), "{}", r.stdout);

    let r = run(&["branch", "--e", "inf", "--n", "6", "--bipartition", "2,1|2,1", "--sign", "+"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("soc D+(2,1|2,1)↓ = D(1,1|2,1) ⊕ D(2|2,1)"), "{}", r.stdout);
}

#[test]
fn branch_fixed_without_sign_prints_both() {
    let r = run(&["branch", "--e", "inf", "--bipartition", "2,1|2,1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("D+(2,1|2,1)") && r.stdout.contains("D-(2,1|2,1)"));
}

#[test]
fn branch_regime_b_has_no_split_terms() {
    let r = run(&["branch", "--e", "4", "--n", "5", "--bipartition", "2|1,1,1", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = parse_json(&r.stdout).unwrap();
    let Payload::Branching { socles, .. } = doc.payload else { panic!("wrong kind") };
    assert_eq!(socles.len(), 1);
    assert_eq!(socles[0].summands.len(), 2);
    assert!(socles[0].summands.iter().all(|s| !s.is_split()));
}

#[test]
fn branch_errors() {
    assert_eq!(run(&["branch", "--e", "4", "--bipartition", "3|-"]).code, 3);
    assert_eq!(run(&["branch", "--e", "inf", "--bipartition", "2,1|1,1", "--sign", "-"]).code, 2);
    assert_eq!(run(&["branch", "--e", "inf", "--n", "4", "--bipartition", "2,1|1,1"]).code, 2);
}

#[test]
fn involution_fixed_point() {
    let r = run(&["involution", "--e", "4", "--n", "4", "--bipartition", "1|2,1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("# e=4 regime=B l=2 n=4\n"));
    assert!(r.stdout.contains("fixed point: yes"));
    assert!(r.stdout.contains("(balanced)"));
}

#[test]
fn dims_text_and_json() {
    let r = run(&["dims", "--bipartition", "2,1|1,1"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "20\n"));
    let r = run(&["dims", "--bipartition", "2,1|2,1", "--format", "json"]);
    let doc = parse_json(&r.stdout).unwrap();
    assert!(matches!(doc.payload, Payload::Dimension { dimension: 80, .. }));
}

#[test]
fn verify_exit_codes() {
    let r = run(&["verify", "--suite", "path-independence", "--e", "4", "--n", "6"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("PASS"));
    assert_eq!(run(&["verify", "--suite", "semisimple", "--e", "4", "--n", "5"]).code, 2);
    assert_eq!(run(&["verify", "--suite", "bogus", "--n", "3"]).code, 2);
    assert_eq!(run(&["verify", "--n", "3"]).code, 2);
}

#[test]
fn json_output_round_trips() {
    for args in [
        &["lattice", "--e", "6", "--n", "4", "--format", "json"][..],
        &["labels", "--e", "4", "--n", "4", "--format", "json"],
        &["branch", "--e", "4", "--n", "4", "--format", "json"],
        &["involution", "--e", "4", "--bipartition", "1|2,2", "--format", "json"],
        &["verify", "--suite", "uniqueness", "--e", "4", "--n", "4", "--format", "json"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        let doc = parse_json(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        if !matches!(doc.payload, Payload::Report(_)) {
            assert_eq!(dnbranch::io::serialize_json(&doc), r.stdout);
        }
    }
}

#[test]
fn output_is_stable_and_cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["lattice", "--e", "4", "--n", "6", "--format", "json"];
    let cold = dnbranch(dir.path(), &args);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0, "cache was not written");
    let warm = dnbranch(dir.path(), &args);
    let smaller = dnbranch(dir.path(), &["lattice", "--e", "4", "--n", "4", "--format", "json"]);
    let uncached = dnbranch(dir.path(), &["lattice", "--e", "4", "--n", "4", "--format", "json", "--no-cache"]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(smaller.stdout, uncached.stdout);
}

#[test]
fn corrupted_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("lattice-e4-B-l2-n5.json"), "{\"schema\": 3").unwrap();
    let r = dnbranch(dir.path(), &["labels", "--e", "4", "--n", "5"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("corrupted"), "{}", r.stderr);
}
