use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn globcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_globcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn out_path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn props_on_identity_map() {
    let o = globcat(&["props", "--map", &fixture("identity.glob"), "--k", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("full: true"));
}

#[test]
fn props_reports_missing_preimages() {
    let o = globcat(&["props", "--map", &fixture("collapse.glob")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("full on 1-cells: false"));
    assert!(stdout(&o).contains("no preimage"));
}

#[test]
fn fused_output_passes_laws() {
    let dir = TempDir::new().unwrap();
    let fused = out_path(&dir, "fused.cat");
    let o = globcat(&["fuse", "--adjequiv", &fixture("walking_iso.adj"), "--out", &fused]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = globcat(&["laws", &fused]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = globcat(&["span", "check", &fused]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn unfaithful_leg_fails_span_check_with_witness() {
    let o = globcat(&["span", "check", &fixture("unfaithful.span")]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("faithful: false"), "{text}");
    assert!(text.contains("  - "), "{text}");
}

#[test]
fn witness_limit_truncates() {
    let o = globcat(&["--witness-limit", "1", "props", "--map", &fixture("collapse.glob")]);
    assert!(stdout(&o).contains("... 2 more"), "{}", stdout(&o));
}

#[test]
fn projection_then_pseudo_inverse() {
    let dir = TempDir::new().unwrap();
    let u = out_path(&dir, "u.cat");
    let e = out_path(&dir, "e.adj");
    assert_eq!(
        code(&globcat(&[
            "project",
            "--adjequiv",
            &fixture("z2_twisted.adj"),
            "--side",
            "u",
            "--out",
            &u
        ])),
        0
    );
    assert_eq!(code(&globcat(&["pseudo-inverse", "--functor", &u, "--out", &e])), 0);
    assert_eq!(code(&globcat(&["laws", &e])), 0);
    let v = out_path(&dir, "v.cat");
    assert_eq!(
        code(&globcat(&[
            "project",
            "--adjequiv",
            &fixture("z2_twisted.adj"),
            "--side",
            "v",
            "--out",
            &v
        ])),
        0
    );
    assert_eq!(code(&globcat(&["laws", &v])), 0);
}

#[test]
fn pseudo_inverse_refuses_non_equivalences() {
    let dir = TempDir::new().unwrap();
    let f = out_path(&dir, "f.cat");
    fs::write(
        &f,
        "category A\nobjects: p q\nmorphisms:\ncompose:\n\ncategory B\nobjects: *\nmorphisms:\ncompose:\n\nfunctor F: A -> B\nobj: p=>* q=>*\nmor:\n",
    )
    .unwrap();
    let o = globcat(&["pseudo-inverse", "--functor", &f]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("full: false"), "{}", stdout(&o));
}

#[test]
fn nerve_then_algebra_check() {
    let dir = TempDir::new().unwrap();
    let n = out_path(&dir, "n.alg");
    let sel = format!("{}@z3", fixture("categories.cat"));
    assert_eq!(code(&globcat(&["nerve", &sel, "--out", &n])), 0);
    let o = globcat(&["alg", "check", &n, "--bound", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("multiplication law: true"));
}

#[test]
fn equivalence_search_verdicts() {
    let cats = fixture("categories.cat");
    let o = globcat(&["equiv-search", &format!("{cats}@iso"), &format!("{cats}@one")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("equivalent: true"));
    let o = globcat(&["equiv-search", &format!("{cats}@two"), &format!("{cats}@one")]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "equivalent: false\n");
}

#[test]
fn pullback_and_span_composition() {
    let dir = TempDir::new().unwrap();
    let p = out_path(&dir, "p.span");
    let cospan = fixture("cospan.glob");
    let o = globcat(&["pullback", &format!("{cospan}@f"), &format!("{cospan}@g"), "--out", &p]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&globcat(&["validate", &p])), 0);
    let s = out_path(&dir, "s.span");
    let id = fixture("identity.span");
    assert_eq!(code(&globcat(&["span", "compose", &id, &id, "--out", &s])), 0);
    assert_eq!(code(&globcat(&["span", "check", &s])), 0);
}

#[test]
fn category_spans_compose() {
    let dir = TempDir::new().unwrap();
    let fused = out_path(&dir, "fused.cat");
    assert_eq!(
        code(&globcat(&[
            "fuse",
            "--adjequiv",
            &fixture("z2_twisted.adj"),
            "--out",
            &fused
        ])),
        0
    );
    let s = out_path(&dir, "s.cat");
    assert_eq!(code(&globcat(&["span", "compose", &fused, &fused, "--out", &s])), 0);
    let o = globcat(&["span", "check", &s]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&globcat(&["validate", &fixture("categories.cat")])), 0);
    let o = globcat(&["validate", &fixture("malformed/triangle.adj")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("violation"));
    let o = globcat(&["validate", &fixture("malformed/undeclared_morphism.cat")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("4:16: reference: undeclared morphism `g`"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&globcat(&["validate", "/nonexistent/file.cat"])), 2);
    assert_eq!(code(&globcat(&["frobnicate"])), 2);
    assert_eq!(
        code(&globcat(&["laws", &format!("{}@nope", fixture("categories.cat"))])),
        2
    );
    assert_eq!(code(&globcat(&["props", "--map", &fixture("categories.cat")])), 2);
}

#[test]
fn randomized_suite_is_reproducible() {
    let a = globcat(&["suite", "--seed", "11", "--cases", "20"]);
    let b = globcat(&["suite", "--seed", "11", "--cases", "20"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
}
