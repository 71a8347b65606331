use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gauss-qec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// JSON document following any summary lines.
fn json_of(o: &Output) -> Value {
    let s = stdout(o);
    let start = s.find('{').expect("JSON on stdout");
    serde_json::from_str(&s[start..]).unwrap()
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("gauss-qec-{}-{name}", std::process::id()))
}

#[test]
fn build_prints_parameters() {
    for (args, want) in [
        (vec!["build", "--code", "1", "--chain", "5", "--boundary", "aperiodic"], "[[48,5,3]]"),
        (vec!["build", "--code", "1", "--honeycomb", "1", "1"], "[[18,1,3]]"),
        (vec!["build", "--code", "2", "--chain", "4", "--boundary", "periodic"], "n=48 k=8"),
        (vec!["build", "--code", "carbon"], "[[12,2,4]]"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).lines().next().unwrap().contains(want), "{args:?}");
    }
}

#[test]
fn build_writes_a_loadable_code_file() {
    let path = temp_path("code1.json");
    let o = run(&["build", "--code", "1", "--chain", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[[12,1,3]] n=12 k=1");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d_claimed"].as_u64()), (Some(12), Some(1), Some(3)));
    let o = run(&["verify", "--code-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report = json_of(&o);
    let dim = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "codespace_dimension").unwrap();
    assert_eq!(dim["pass"], true);
    assert!(dim["detail"].as_str().unwrap().contains("projector 2"));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--code", "carbon"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--code", "1", "--chain", "3", "--boundary", "periodic"]).status.code(), Some(0));
    // the two bottom links of a two-plaquette ring form a weight-2 logical
    let o = run(&["verify", "--code", "1", "--chain", "2", "--boundary", "periodic"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_of(&o)["pass"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["build", "--code", "1"]).status.code(), Some(2));
    assert_eq!(run(&["build", "--code", "9", "--chain", "1"]).status.code(), Some(2));
    assert_eq!(run(&["build", "--code", "2", "--chain", "3", "--boundary", "periodic"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--code", "1", "--honeycomb", "1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn spectrum_commands() {
    let o = run(&["spectrum", "--code", "1", "--chain", "2", "--g2", "1.0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["basis_dim"], 4);
    assert_eq!(v["comparison"]["pass"], true);
    let o = run(&["spectrum", "--code", "2", "--chain", "4", "--boundary", "periodic"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["basis_dim"], 32);
    assert_eq!(v["sector_mixing_entries"], 0);
    let o = run(&["spectrum", "--n", "1", "--code", "1"]);
    let ev = json_of(&o)["eigenvalues"].clone();
    assert_eq!(ev, serde_json::json!([-1.38600093633, 2.88600093633]));
}

#[test]
fn output_is_deterministic() {
    let args = ["encode-check", "--seed", "7"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let args = ["spectrum", "--code", "1", "--chain", "3", "--g2", "0.5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn decode_table_reports() {
    let v = json_of(&run(&["decode-table", "--code", "vertex-block", "--model", "z-only"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[1]["syndrome"], "1000000");
    assert_eq!(rows[1]["correction"], "+ZIIIIIIII");
    let v = json_of(&run(&["decode-table", "--code", "422"]));
    assert_eq!(v["status"], "detect_only");
    let v = json_of(&run(&["decode-table", "--code", "carbon"]));
    assert_eq!(v["entries"], 36);
}

#[test]
fn qubit_cost_arithmetic() {
    let o = run(&["qubit-cost", "--chain", "3"]);
    let text = stdout(&o);
    assert!(text.contains("N=3: 5*10 = 50 (15N = 45) | 9N+3 = 30 | 12N = 36"), "{text}");
}
