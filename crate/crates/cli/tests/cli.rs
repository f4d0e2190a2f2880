use std::path::PathBuf;
use std::process::{Command, Output};

use dblcat_cli::report::RunReport;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn dblcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dblcat")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn report(o: &Output) -> RunReport {
    RunReport::from_json(&String::from_utf8_lossy(&o.stdout)).expect("stdout is a json report")
}

#[test]
fn validate_builtins() {
    let o = dblcat(&["validate", "--builtin", "span", "--max-size", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&o);
    assert!(r.passed && !r.results.is_empty());
    assert_eq!(r.schema_version, 1);
    assert_eq!(r.level.as_deref(), Some("symmetric"));

    let o = dblcat(&["validate", "--builtin", "rel", "--max-size", "2", "--level", "monoidal"]);
    assert_eq!(code(&o), 0);
    assert!(report(&o).results.iter().all(|r| !r.group.starts_with("braided")));
}

#[test]
fn validate_rejects_a_corrupted_composite() {
    let o = dblcat(&["validate", "--table", &fixture("broken_interchange.json")]);
    assert_eq!(code(&o), 1);
    let r = report(&o);
    let bad = r.results.iter().find(|x| !x.passed).expect("a failing axiom");
    assert!(bad.counterexample.is_some());
}

#[test]
fn correct_tables_lift() {
    for f in ["symmetric.json", "pinned_pentagonator.json"] {
        let o = dblcat(&["lift", "--table", &fixture(f), "--level", "symmetric"]);
        assert_eq!(code(&o), 0, "{f}");
        assert_eq!(report(&o).model.source, format!("table {f}"));
    }
}

#[test]
fn nonfibrant_table_names_the_morphism() {
    let o = dblcat(&["lift", "--table", &fixture("nonfibrant.json"), "--level", "monoidal"]);
    assert_eq!(code(&o), 1);
    let r = report(&o);
    let cert = r.certificate.expect("certificate summary");
    assert_eq!(cert.status, "not fibrant");
    assert!(cert.problems.iter().any(|p| p.contains("up")), "{:?}", cert.problems);
    let f = r.results.iter().find(|x| x.group == "fibrancy").expect("fibrancy result");
    assert!(!f.passed && f.counterexample.as_deref().is_some_and(|c| c.contains("up")));
}

#[test]
fn every_mutation_exits_one_with_a_counterexample() {
    for (file, level) in [
        ("broken_interchange.json", "monoidal"),
        ("broken_hexagon.json", "braided"),
        ("non_companion.json", "monoidal"),
        ("inverted_pentagonator.json", "monoidal"),
        ("non_involutive_braiding.json", "symmetric"),
    ] {
        let o = dblcat(&["lift", "--table", &fixture(file), "--level", level]);
        assert_eq!(code(&o), 1, "{file}");
        let r = report(&o);
        assert!(r.results.iter().any(|x| !x.passed && x.counterexample.is_some()), "{file}");
    }
}

#[test]
fn operational_failures_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let junk = junk.display().to_string();
    assert_eq!(code(&dblcat(&["validate", "--table", &junk])), 2);
    assert_eq!(code(&dblcat(&["validate", "--table", "/nonexistent/model.json"])), 2);
    assert_eq!(code(&dblcat(&["lift", "--builtin", "span", "--level", "sideways"])), 2);
    assert_eq!(code(&dblcat(&["validate"])), 2);
    assert_eq!(code(&dblcat(&["report", &junk])), 2);
    // A monoidal table cannot be lifted as braided without a braiding.
    let spec = dblcat::fixtures::symmetric().unwrap();
    let mut plain = spec.clone();
    plain.braiding = None;
    let path = dir.path().join("plain.json");
    std::fs::write(&path, plain.to_json()).unwrap();
    let o = dblcat(&["lift", "--table", &path.display().to_string(), "--level", "braided"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn lift_is_deterministic() {
    let args = ["lift", "--builtin", "span", "--level", "braided", "--seed", "5", "--budget", "10"];
    let (a, b) = (dblcat(&args), dblcat(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let theta = dblcat(&["lift", "--builtin", "span", "--level", "braided", "--check-mode", "theta", "--seed", "5", "--budget", "10"]);
    assert_eq!(code(&theta), 0);
    assert_eq!(report(&theta).check_mode.as_deref(), Some("theta"));
}

#[test]
fn symmetric_text_report_lists_every_group_with_citations() {
    let o = dblcat(&["lift", "--builtin", "span", "--level", "symmetric", "--budget", "5", "--format", "text"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for g in ["three equations", "four 2-cell diagrams", "two axioms", "one additional axiom"] {
        assert!(text.lines().any(|l| l.starts_with("== ") && l.contains(g)), "missing group {g}");
    }
    let axioms: Vec<_> = text.lines().filter(|l| l.starts_with("PASS\t")).collect();
    assert!(!axioms.is_empty());
    for l in axioms {
        let citation = l.split('\t').nth(2).unwrap();
        assert!(citation.len() > 2 && citation.starts_with('['), "{l}");
    }
}

#[test]
fn report_command_round_trips() {
    let o = dblcat(&["lift", "--table", &fixture("broken_hexagon.json"), "--level", "braided"]);
    let json = String::from_utf8(o.stdout).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let jpath = dir.path().join("r.json");
    std::fs::write(&jpath, &json).unwrap();
    let text = dblcat(&["report", &jpath.display().to_string()]);
    assert_eq!(code(&text), 0);
    let tpath = dir.path().join("r.txt");
    std::fs::write(&tpath, &text.stdout).unwrap();
    let back = dblcat(&["report", &tpath.display().to_string(), "--format", "json"]);
    assert_eq!(code(&back), 0);
    assert_eq!(String::from_utf8(back.stdout).unwrap(), json);
}
