use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn k2n(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_k2n"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut a = vec!["gen"];
    a.extend(args);
    let o = k2n(&a, "", &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn j_graph_has_max_k2_four() {
    let g = gen(&["J", "1", "4"]);
    let o = k2n(&["maxk2", "-"], &g, &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["max_k2"], 4);
    let o = k2n(&["--human", "maxk2", "-"], &g, &[]);
    assert_eq!(stdout(&o).trim(), "4");
}

#[test]
fn type_one_graph_has_no_k25() {
    let g = gen(&["type1-random", "14", "--seed", "7"]);
    let o = k2n(&["minor", "-", "--n", "5"], &g, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "none");
    let o = k2n(&["minor", "-", "--n", "2"], &g, &[]);
    assert_eq!(o.status.code(), Some(0));
    let w: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(w["leaves"].as_array().unwrap().len(), 2);
    let o = k2n(&["check", "-", "--class", "type1"], &g, &[]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn long_cycle_decomposes_into_short_cycles() {
    let g = gen(&["cycle", "7"]);
    let o = k2n(&["decompose", "-"], &g, &[]);
    assert_eq!(o.status.code(), Some(0));
    let t: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let pieces = t["pieces"].as_array().unwrap();
    assert!(pieces.len() >= 2);
    for p in pieces {
        let (n, m) = (p["graph"]["n"].as_u64().unwrap(), p["graph"]["edges"].as_array().unwrap().len() as u64);
        assert!((3..=6).contains(&n) && n == m, "piece with {n} vertices and {m} edges");
    }
}

#[test]
fn edge_list_input_and_conversion() {
    let edges = "# n 4\n0 1\n1 2\n2 3\n3 0\n";
    let o = k2n(&["convert", "-", "--format", "json"], edges, &[]);
    assert_eq!(o.status.code(), Some(0));
    let back = k2n(&["convert", "-", "--format", "edges"], &stdout(&o), &[]);
    assert_eq!(stdout(&back), "# n 4\n0 1\n0 3\n1 2\n2 3\n");
    let dot = k2n(&["convert", "-", "--format", "dot"], edges, &[]);
    assert!(stdout(&dot).contains("0 -- 1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(k2n(&["maxk2", "-"], "0 x\n", &[]).status.code(), Some(2));
    assert_eq!(k2n(&["maxk2", "/no/such/file"], "", &[]).status.code(), Some(2));
    assert_eq!(k2n(&["frobnicate"], "", &[]).status.code(), Some(2));
    assert_eq!(k2n(&["gen", "no-such-family"], "", &[]).status.code(), Some(2));
    assert_eq!(k2n(&["verify", "no-such-suite"], "", &[]).status.code(), Some(2));
    let g = gen(&["cycle", "5"]);
    assert_eq!(k2n(&["maxk2", "-"], &g, &[("K2N_WORK_LIMIT", "lots")]).status.code(), Some(2));
}

#[test]
fn work_limit_exits_three() {
    let g = gen(&["J", "1", "3"]);
    let o = k2n(&["maxk2", "-"], &g, &[("K2N_WORK_LIMIT", "1")]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let o = k2n(&["maxk2", "-"], &g, &[("K2N_WORK_LIMIT", "100000000")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn extract_prints_a_presentation() {
    let g = gen(&["J", "1", "3"]);
    let o = k2n(&["extract", "-", "--n", "5", "--strip-threshold", "3"], &g, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let e: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p: k2n::dto::PresentationJson = serde_json::from_value(e["presentation"].clone()).unwrap();
    let back = p.to_presentation().unwrap().augment().unwrap();
    let orig = k2n::format::parse_graph(&g).unwrap();
    assert_eq!((back.n(), back.m()), (orig.n(), orig.m()));
}

#[test]
fn verify_lists_and_runs_at_smoke_scale() {
    let o = k2n(&["verify", "--list"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let list = stdout(&o);
    for s in k2n::verify::SUITES {
        assert!(list.contains(s.name));
    }
    let o = k2n(&["--human", "verify", "j-constant", "--scale", "smoke"], "", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("pass"));
    let o = k2n(&["verify", "3.2", "--scale", "smoke", "--seed", "5"], "", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
