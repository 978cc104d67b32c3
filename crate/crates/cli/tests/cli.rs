use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const PETERSEN: &str = "IheA@GUAo";
const C6: &str = "EhEG";

fn repdim(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_repdim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn repdim");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn petersen_repnum() {
    let o = repdim(&["repnum", "--inline", PETERSEN], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rep"], 4);
    assert_eq!(v["case"], "Spectral");
}

#[test]
fn cycle_from_stdin_and_edge_list() {
    let o = repdim(&["repnum"], &format!("{C6}\n"));
    assert_eq!(json(&o)["rep"], 3);
    let o = repdim(&["repnum", "--out", "text"], "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("rep 3\n"));
    let o = repdim(&["repnum", "--format", "edgelist", "--inline", "3\n0 1\n1 2"], "");
    assert_eq!(json(&o)["rep"], 1);
}

#[test]
fn embed_output_is_reproducible() {
    let a = repdim(&["embed", "--inline", PETERSEN], "");
    let b = repdim(&["embed", "--inline", PETERSEN], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["embedding"]["dim"], 4);
    assert_eq!(v["embedding"]["alpha"], 1.0);
    assert_eq!(v["embedding"]["points"].as_array().unwrap().len(), 10);
    let keys: Vec<&String> = v["embedding"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["dim", "alpha", "beta", "points"]);
}

#[test]
fn empty_input_is_a_usage_error() {
    let o = repdim(&["repnum"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage: repdim repnum"));
    let o = repdim(&["embed"], "\n  \n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(repdim(&["nonsense"], "").status.code(), Some(1));
    assert_eq!(repdim(&["repnum", "--out", "xml", "--inline", C6], "").status.code(), Some(1));
    assert_eq!(repdim(&["repnum", "--tol-group", "0", "--inline", C6], "").status.code(), Some(1));
    let o = repdim(&["repnum", "--inline", "Ihe"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
    let o = repdim(&["repnum", "--format", "edgelist", "--inline", "3\n0 7"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn batch_preserves_order_and_reports_errors() {
    let input = format!("{PETERSEN}\n{C6}\nnot graph6\n\nC~\n");
    let o = repdim(&["repnum"], &input);
    assert_eq!(o.status.code(), Some(2));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["rep"], 4);
    assert_eq!(lines[1]["rep"], 3);
    assert_eq!(lines[2]["line"], 3);
    assert_eq!(lines[2]["error"]["kind"], "parse");
    assert_eq!(lines[3]["line"], 5);
    assert_eq!(lines[3]["rep"], 3);

    let again = repdim(&["repnum"], &input);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn spectrum_csv() {
    let o = repdim(&["spectrum", "--out", "csv", "--inline", PETERSEN], "");
    assert_eq!(stdout(&o), "tau,mult,beta\n-2,4,0\n1,5,0\n3,1,1\n");
    let v = json(&repdim(&["spectrum", "--inline", PETERSEN], ""));
    assert_eq!(v["n"], 10);
    assert_eq!(v["min_gap"], 2.0);
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let csv = repdim(&["embed", "--out", "csv", "--inline", C6], "");
    let path = dir.path().join("c6.csv");
    std::fs::write(&path, &csv.stdout).unwrap();
    let o = repdim(&["verify", "--inline", C6, "--coords", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);

    let square = dir.path().join("square.json");
    std::fs::write(&square, "[[0,0],[1,0],[1,1],[0,1]]").unwrap();
    let c4 = "Cl";
    let p4 = "Ch";
    let ok = json(&repdim(&["verify", "--inline", c4, "--coords", square.to_str().unwrap()], ""));
    assert_eq!(ok["ok"], true, "{ok}");
    let bad = json(&repdim(&["verify", "--inline", p4, "--coords", square.to_str().unwrap()], ""));
    assert_eq!(bad["ok"], false);
    assert!(!bad["reasons"].as_array().unwrap().is_empty());

    let garbage = dir.path().join("garbage.csv");
    std::fs::write(&garbage, "0,zero\n").unwrap();
    let o = repdim(&["verify", "--inline", c4, "--coords", garbage.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_scan() {
    let o = repdim(&["oracle", "--grid", "100", "--out", "text", "--inline", "Cl"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("rep_oracle 2\ncritical_only true\n"));
    let o = repdim(&["oracle", "--grid", "10", "--inline", "Cl"], "");
    assert_eq!(o.status.code(), Some(1));
}
