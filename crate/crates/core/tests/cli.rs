use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gallai(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pn_reads_graph6_from_stdin() {
    // K5 and C4
    let o = gallai(&["pn", "-"], "D~{\nCl\n");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["pn"], 3);
    assert_eq!(lines[1]["pn"], 2);
    assert_eq!(lines[1]["gallai_status"], "gallai");
}

#[test]
fn decompose_reads_edge_lists() {
    let o = gallai(&["--format", "edgelist", "decompose", "-"], "3 3\n0 1\n1 2\n0 2\n");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["paths"].as_array().unwrap().len(), 2);
}

#[test]
fn generate_then_classify_is_deterministic() {
    let g = gallai(&["generate", "connected", "--max-n", "4"], "");
    let text = stdout(&g);
    assert_eq!(text.lines().count(), 1 + 1 + 2 + 6);
    let a = gallai(&["--deterministic", "classify", "-"], &text);
    let b = gallai(&["--deterministic", "classify", "-"], &text);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("elapsed_ms"));
}

#[test]
fn ev_reports_the_even_triangle() {
    let o = gallai(&["generate", "clique-minus-matching", "--size", "2"], "");
    let e = gallai(&["ev", "-"], &stdout(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&e).trim()).unwrap();
    assert_eq!(v["even_vertices"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["max_e_degree"], 2);
}

#[test]
fn transform_apply_and_verify() {
    let req = r#"{"graph":"F?O__","decomposition":{"paths":[[1,4],[2,5],[3,6]]},"edges":[[0,1]],"pivot":0,"direction":"towards"}"#;
    let o = gallai(&["transform", "-"], req);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let cert = stdout(&o);
    let v = gallai(&["transform", "--verify", "-"], &cert);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("\"valid\":true"));

    let mut bad: serde_json::Value = serde_json::from_str(cert.trim()).unwrap();
    bad["after"] = bad["before"].clone();
    let v = gallai(&["transform", "--verify", "-"], &bad.to_string());
    assert_eq!(v.status.code(), Some(2));
}

#[test]
fn check_reports_summary_and_exit_code() {
    let o = gallai(&["--deterministic", "check", "--suite", "theorem31-sweep", "--max-n", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(summary["violations"], 0);
    assert_eq!(summary["processed"].as_u64().unwrap() as usize, stdout(&o).lines().count());
}

#[test]
fn timeouts_exit_with_three() {
    // an 11-vertex SET graph whose optimality proof takes seconds
    let o = gallai(&["--timeout-ms", "20", "pn", "-"], "J|jfNBi|F??\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["exact"], false);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_input_fails_cleanly() {
    let o = gallai(&["pn", "-"], "D?\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}
