//! End-to-end checks of the binary: exit codes, output bytes, and the
//! environment-variable fallbacks.

use std::process::{Command, Output};

fn chordlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordlab"))
        .args(args)
        .env_remove("CHORDLAB_CAP")
        .env_remove("CHORDLAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn table_l_csv_matches_fixed_rows() {
    let out = chordlab(&["table", "L", "--nmax", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,0,1,2,3,4,5\n\
         0,1,,,,,\n\
         1,0,1,,,,\n\
         2,1,1,1,,,\n\
         3,5,6,3,1,,\n\
         4,36,41,21,6,1,\n\
         5,329,365,185,55,10,1\n"
    );
}

#[test]
fn table_e_single_row() {
    let out = chordlab(&["table", "E", "--nmax", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 | 1\n");
}

#[test]
fn table_sullivan_within_cap() {
    let out = chordlab(&["table", "sullivan", "--nmax", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,1,2,3,4,5\n\
         1,1,,,,\n\
         2,3,1,,,\n\
         3,15,5,1,,\n\
         4,105,36,10,1,\n\
         5,945,329,99,20,1\n"
    );
}

#[test]
fn table_bfile_offsets() {
    let out = chordlab(&["table", "L", "--nmax", "1", "--format", "bfile"]);
    assert_eq!(stdout(&out), "0 1\n1 0\n2 1\n");
    let out = chordlab(&["table", "narayana", "--nmax", "2", "--format", "bfile"]);
    assert_eq!(stdout(&out), "1 1\n2 1\n3 1\n");
}

#[test]
fn enumerate_line_counts() {
    let out = chordlab(&["enumerate", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 15);
    assert!(text.starts_with("(1,2)(3,4)(5,6)\n"));

    // the empty diagram prints as one empty line
    let out = chordlab(&["enumerate", "--n", "0"]);
    assert_eq!(stdout(&out), "\n");
}

#[test]
fn enumerate_histogram_json() {
    let out = chordlab(&["enumerate", "--n", "4", "--stat", "lr", "--histogram"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"counts\":{\"1\":24,\"2\":58,\"3\":22,\"4\":1},\"filter\":\"all\",\"n\":4,\"statistic\":\"lr\"}\n"
    );
}

#[test]
fn enumerate_histogram_requires_stat() {
    let out = chordlab(&["enumerate", "--n", "2", "--histogram"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn map_verbs() {
    let out = chordlab(&["map", "unwrap", "(1,6)(2,5)(3,4)", "--mark", "(3,4)"]);
    assert_eq!(stdout(&out), "(1,4)(2,6)(3,5)\n");

    let out = chordlab(&["map", "rewrap", "(1,4)(2,6)(3,5)"]);
    assert_eq!(stdout(&out), "(1,6)(2,5)(3,4) mark=(3,4)\n");

    let out = chordlab(&["map", "dyck2match", "UUDUDD"]);
    assert_eq!(stdout(&out), "(1,3)(2,5)(4,6)\n");

    let out = chordlab(&["map", "match2dyck", "(1,3)(2,5)(4,6)"]);
    assert_eq!(stdout(&out), "UUDUDD\n");

    let out = chordlab(&["map", "phi", "(1,4)(2,6)(3,5)"]);
    assert_eq!(stdout(&out), "(1,6)(2,5)(3,4)\n");
}

#[test]
fn map_error_paths() {
    // precondition failure names the nesting pair and exits 1
    let out = chordlab(&["map", "match2dyck", "(1,4)(2,3)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("(1,4)"));
    assert!(stderr(&out).contains("(2,3)"));

    // parse failure exits 64
    let out = chordlab(&["map", "match2dyck", "(1,4)(2"]);
    assert_eq!(out.status.code(), Some(64));

    // invalid matching in the input is a usage error
    let out = chordlab(&["map", "match2dyck", "(1,3)(2,3)"]);
    assert_eq!(out.status.code(), Some(64));

    // missing mark
    let out = chordlab(&["map", "unwrap", "(1,2)"]);
    assert_eq!(out.status.code(), Some(64));

    // phi is undefined on exactly one short chord
    let out = chordlab(&["map", "phi", "(1,2)(3,5)(4,6)"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suites_run_clean() {
    for suite in [
        "rowsum",
        "recurrence",
        "bijection",
        "expectation",
        "narayana-transport",
    ] {
        let out = chordlab(&["verify", suite, "--nmax", "5", "--cap", "5"]);
        assert!(out.status.success(), "suite {suite}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("result: PASS\n"));
    }
    let out = chordlab(&["verify", "egf", "--nmax", "10"]);
    assert!(out.status.success());
    let out = chordlab(&["verify", "reversal", "--nmax", "20"]);
    assert!(out.status.success());
}

#[test]
fn verify_rowsum_full_enumeration_to_n8() {
    let out = chordlab(&["verify", "rowsum", "--nmax", "8", "--threads", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("for n in 0..=8"));
    assert!(stdout(&out).ends_with("result: PASS\n"));
}

#[test]
fn resource_caps_exit_two() {
    let out = chordlab(&["enumerate", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = chordlab(&["table", "sullivan", "--nmax", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = chordlab(&["table", "L", "--nmax", "201"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_sixty_four() {
    for args in [
        &["table", "Q", "--nmax", "3"][..],
        &["table", "L", "--nmax", "3", "--format", "xml"][..],
        &["verify", "everything", "--nmax", "3"][..],
        &["enumerate", "--n", "2", "--filter", "bogus"][..],
        &["enumerate", "--n", "2", "--stat", "peaks"][..],
        &["map", "rot13", "(1,2)"][..],
        &["--frobnicate"][..],
    ] {
        let out = chordlab(args);
        assert_eq!(out.status.code(), Some(64), "args {args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = chordlab(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("chordlab"));
}

#[test]
fn env_fallback_and_flag_priority() {
    let run = |envs: &[(&str, &str)], args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_chordlab"));
        cmd.args(args);
        cmd.env_remove("CHORDLAB_CAP")
            .env_remove("CHORDLAB_THREADS");
        for (k, v) in envs {
            cmd.env(k, v);
        }
        cmd.output().expect("binary runs")
    };
    // env lowers the cap
    let out = run(&[("CHORDLAB_CAP", "3")], &["enumerate", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    // flag wins over env
    let out = run(
        &[("CHORDLAB_CAP", "3")],
        &["enumerate", "--n", "4", "--cap", "8"],
    );
    assert!(out.status.success());
    // threads env accepted
    let out = run(
        &[("CHORDLAB_THREADS", "4")],
        &["verify", "rowsum", "--nmax", "4", "--cap", "4"],
    );
    assert!(out.status.success());
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("chordlab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("l.csv");
    let out = chordlab(&[
        "table",
        "L",
        "--nmax",
        "2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "n,0,1,2\n0,1,,\n1,0,1,\n2,1,1,1\n");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn analyze_formats() {
    let out = chordlab(&["analyze", "L", "--nmax", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 7); // rows 0..=6

    let out = chordlab(&["analyze", "T", "--nmax", "4", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 4);
}

#[test]
fn verify_report_bytes_do_not_depend_on_threads() {
    let one = chordlab(&[
        "verify",
        "recurrence",
        "--nmax",
        "5",
        "--cap",
        "5",
        "--threads",
        "1",
    ]);
    let eight = chordlab(&[
        "verify",
        "recurrence",
        "--nmax",
        "5",
        "--cap",
        "5",
        "--threads",
        "8",
    ]);
    assert!(one.status.success() && eight.status.success());
    assert_eq!(one.stdout, eight.stdout);
}
