//! Golden tests for the `egal-orient` binary: exit codes, headline lines,
//! and byte-identical reruns.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

static COUNTER: AtomicUsize = AtomicUsize::new(0);

fn write_temp(name: &str, content: &str) -> PathBuf {
    let id = COUNTER.fetch_add(1, Ordering::SeqCst);
    let mut path = std::env::temp_dir();
    path.push(format!(
        "egal-orient-test-{}-{}-{}",
        std::process::id(),
        id,
        name
    ));
    std::fs::write(&path, content).expect("write temp file");
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_egal-orient"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn minlex_triangle() {
    let g = write_temp("triangle.g", "3 3\n0 1\n1 2\n2 0\n");
    let out = run(&["minlex", g.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("sequence: 1 1 1\n"), "got: {}", text);
    // orientation body: three "tail head" lines
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn minlex_trace_and_seed_are_deterministic() {
    let g = write_temp("k4.g", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let args = ["minlex", g.to_str().unwrap(), "--trace", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.contains("sequence: 2 2 1 1"), "got: {}", text);
    for line in text.lines().take_while(|l| l.starts_with("reversal")) {
        assert_eq!(line.split_whitespace().count(), 4);
    }
}

#[test]
fn sc_minmax_reports_bridge_with_exit_1() {
    let g = write_temp("path3.g", "3 2\n0 1\n1 2\n");
    let out = run(&["sc-minmax", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out), "error: bridge 0-1\n");
    assert!(stdout(&out).is_empty());
}

#[test]
fn sc_minmax_with_certificate() {
    let g = write_temp("k4.g", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&["sc-minmax", g.to_str().unwrap(), "--certificate"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("max indegree: 2\n"), "got: {}", text);
    assert!(text.contains("certificate:"), "got: {}", text);
}

#[test]
fn oracle_k4_minlex() {
    let g = write_temp("k4.g", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&[
        "oracle",
        g.to_str().unwrap(),
        "--constraint",
        "none",
        "--objective",
        "minlex",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("sequence: 2 2 1 1\n"));
}

#[test]
fn oracle_sc_on_bridged_graph_is_infeasible() {
    let g = write_temp("path3.g", "3 2\n0 1\n1 2\n");
    let out = run(&[
        "oracle",
        g.to_str().unwrap(),
        "--constraint",
        "sc",
        "--objective",
        "minmax",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "infeasible\n");
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_graph_file_exits_2() {
    let g = write_temp("loop.g", "2 1\n0 0\n");
    let out = run(&["minlex", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out), "error: self-loop at line 2\n");
}

#[test]
fn bound_sc_prints_value_and_refuses_large() {
    let g = write_temp("k4.g", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&["bound", "sc", g.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "sc lower bound: 2\n");

    let mut big = String::from("21 21\n");
    for i in 0..21 {
        big.push_str(&format!("{} {}\n", i, (i + 1) % 21));
    }
    let g = write_temp("c21.g", &big);
    let out = run(&["bound", "sc", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("refused"));
}

#[test]
fn strip_outputs_order_and_peak() {
    let g = write_temp("star.g", "4 3\n0 1\n0 2\n0 3\n");
    let out = run(&["strip", g.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 1 2 0 3"), "got: {}", text);
    assert!(text.contains("peak: 1"), "got: {}", text);
}

#[test]
fn route_tables_are_deterministic_and_complete() {
    let g = write_temp("c5.g", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let a = run(&["route-tables", g.to_str().unwrap()]);
    let b = run(&["route-tables", g.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.starts_with("ordering: "), "got: {}", text);
    assert_eq!(
        text.lines().count(),
        6,
        "one ordering line plus five arc lines"
    );
}

#[test]
fn route_sim_all_pairs_summary() {
    let g = write_temp("k4.g", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&["--quiet", "route-sim", g.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pairs: 12"), "got: {}", text);
    assert!(text.contains("max table size: 2"), "got: {}", text);
}

#[test]
fn route_sim_single_pair() {
    let g = write_temp("c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let out = run(&["route-sim", g.to_str().unwrap(), "--pairs", "0,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.lines().next().unwrap().starts_with("route 0 2:"),
        "got: {}",
        text
    );
    assert!(text.contains("pairs: 1"));
}

#[test]
fn gadget_build_emits_metadata_and_graph() {
    let out = run(&["gadget", "build", "5", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# root 10"), "got: {}", text);
    assert!(text.contains("11 "), "vertex count header");
    let bad = run(&["gadget", "build", "4", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn gadget_pipeline_reduce_verify_extract() {
    let sc = write_temp("cover.sc", "5 3\n0 1 3 4\n0 2 4\n1 2 4\n");
    let reduce = run(&["gadget", "reduce", sc.to_str().unwrap()]);
    assert!(reduce.status.success());
    let text = stdout(&reduce);
    assert!(
        text.starts_with("# sidecar {\"k\":5,"),
        "got: {}",
        &text[..60.min(text.len())]
    );
    assert!(text.contains("\n91 "), "91-vertex graph header");

    let verify = run(&["gadget", "verify", sc.to_str().unwrap(), "0,2"]);
    assert!(verify.status.success());
    let vtext = stdout(&verify);
    assert!(vtext.contains("# acyclic true"), "got: {}", vtext);
    assert!(vtext.contains("# indegree-k"), "got: {}", vtext);

    // pipe the verify orientation back through extract
    let orientation = write_temp("fig2.or", &vtext);
    let extract = run(&[
        "gadget",
        "extract",
        sc.to_str().unwrap(),
        orientation.to_str().unwrap(),
    ]);
    assert!(extract.status.success());
    let etext = stdout(&extract);
    assert!(etext.contains("valid: true"), "got: {}", etext);
    assert!(etext.contains("size: 2"), "got: {}", etext);

    let bad_cover = run(&["gadget", "verify", sc.to_str().unwrap(), "1"]);
    assert_eq!(bad_cover.status.code(), Some(1));
}

#[test]
fn sc_minmax_compare_lex_is_informational() {
    let g = write_temp("bowtie.g", "5 6\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
    let out = run(&["--quiet", "sc-minmax", g.to_str().unwrap(), "--compare-lex"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sequence: "), "got: {}", text);
    assert!(text.contains("oracle sc minlex: "), "got: {}", text);
}

#[test]
fn quiet_suppresses_bodies() {
    let g = write_temp("triangle.g", "3 3\n0 1\n1 2\n2 0\n");
    let out = run(&["--quiet", "minlex", g.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "sequence: 1 1 1\n");
}
