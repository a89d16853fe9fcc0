//! End-to-end checks of the binary: output lines, JSON documents, and the
//! documented exit codes.

use loopbraid::BraidWord;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn eq_answers_true_with_exit_zero() {
    let out = run(&["eq", "-n", "2", "t1 s1", "s1 t2"]);
    assert_eq!(stdout(&out).trim(), "true");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn eq_answers_false_with_exit_one() {
    let out = run(&["eq", "-n", "2", "s1", "r1"]);
    assert_eq!(stdout(&out).trim(), "false");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn a_lone_wen_does_not_close() {
    let out = run(&["closable", "-n", "1", "t1"]);
    assert_eq!(stdout(&out).trim(), "false");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invariants_emit_the_closure_document() {
    let out = run(&["invariants", "-n", "2", "s1"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"n":2,"components":1,"cycles":[[2,1]],"sigma_parity":1}"#
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invariants_refuse_a_nonclosable_word() {
    let out = run(&["invariants", "-n", "2", "t1 s1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn conj_prints_a_witness_and_exits_zero() {
    let out = run(&["conj", "-n", "2", "--radius", "1", "s1", "r1 s1 r1"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"verdict":"conjugate","witness":"r1","radius":1}"#
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn conj_reports_a_distinction_and_exits_one() {
    let out = run(&["conj", "-n", "2", "--radius", "1", "s1", "t1 s1"]);
    assert!(stdout(&out).contains(r#""verdict":"distinguished""#));
    assert!(stdout(&out).contains(r#""invariant":"signed_cycle_type""#));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn conj_exhausting_its_budget_exits_three() {
    let out = run(&[
        "conj", "-n", "2", "--radius", "3", "--budget", "2", "s1", "s1 s1 s1",
    ]);
    assert!(stdout(&out).contains(r#""verdict":"unknown""#));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn certify_confirms_and_rejects_conjugators() {
    let good = run(&["certify", "-n", "2", "s1", "r1 s1 r1", "r1"]);
    assert_eq!(stdout(&good).trim(), "true");
    assert_eq!(good.status.code(), Some(0));

    let bad = run(&["certify", "-n", "2", "s1", "r1 s1 r1", "t1"]);
    assert_eq!(stdout(&bad).trim(), "false");
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn nf_emits_both_factors() {
    let out = run(&["nf", "-n", "2", "s1 t2"]);
    assert_eq!(stdout(&out).trim(), r#"{"alpha":"s1","pi_tau":"t1"}"#);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn selftest_passes_through_six_strands() {
    let out = run(&["selftest", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with("all pass")));
}

#[test]
fn random_is_reproducible_and_parses() {
    let first = run(&["random", "-n", "4", "--len", "12", "--seed", "9"]);
    let second = run(&["random", "-n", "4", "--len", "12", "--seed", "9"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    let word_line = text.lines().next().expect("word on the first line");
    let word = BraidWord::parse(4, word_line).expect("emitted word parses");
    assert_eq!(word.len(), 12);
    let doc: serde_json::Value = serde_json::from_str(text.lines().nth(1).unwrap()).unwrap();
    assert_eq!(doc["seed"], 9);
    assert_eq!(doc["word"], word_line);
}

#[test]
fn bad_tokens_exit_two_and_name_the_token() {
    let out = run(&["eq", "-n", "2", "q9", "s1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("q9"));

    let out = run(&["closable", "-n", "2", "s5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("s5"));
}
