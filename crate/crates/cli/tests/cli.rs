use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylext")).args(args).env_remove("WEYLEXT_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_lines(s: &str) -> Vec<&str> {
    s.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn ext_csv_rows() {
    let o = run(&["ext", "--lambda", "3,0", "--mu", "2,1", "--p", "3", "--l", "3", "--m", "0..3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_lines(&stdout(&o)), vec!["m,dim", "0,1", "1,1", "2,0", "3,0"]);
}

#[test]
fn default_range_stops_at_depth_difference() {
    let o = run(&["ext", "--lambda", "6,0", "--mu", "3,3", "--p", "2", "--format", "csv"]);
    assert_eq!(data_lines(&stdout(&o)), vec!["m,dim", "0,1", "1,1", "2,1", "3,1"]);
}

#[test]
fn json_and_csv_agree() {
    let args = ["ext", "--lambda", "6,0", "--mu", "3,3", "--p", "2", "--m", "0..5"];
    let csv = stdout(&run(&[&args[..], &["--format", "csv"]].concat()));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&[&args[..], &["--format", "json"]].concat()))).unwrap();
    let from_json: Vec<String> =
        json["values"].as_array().unwrap().iter().map(|v| format!("{},{}", v["m"], v["dim"])).collect();
    assert_eq!(data_lines(&csv)[1..], from_json.iter().map(String::as_str).collect::<Vec<_>>()[..]);
    assert!(json["convention"].as_str().unwrap().contains("dominance"));
}

#[test]
fn trace_is_embedded() {
    let o = run(&["ext", "--lambda", "3,0", "--mu", "2,1", "--p", "3", "--m", "1", "--trace", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let trace = &json["values"][0]["trace"];
    assert_eq!(trace[0]["rule"], "odd-split");
    assert_eq!(trace[0]["a"], 1);
}

#[test]
fn exit_codes() {
    let unsupported = run(&["ext", "--lambda", "2,1", "--mu", "3,0", "--p", "3", "--target", "simple", "--m", "1"]);
    assert_eq!(unsupported.status.code(), Some(2));
    let zero = run(&["ext", "--lambda", "4,0", "--mu", "2,2", "--p", "5", "--m", "0"]);
    assert_eq!(zero.status.code(), Some(0));
    assert_eq!(run(&["ext", "--lambda", "3,x", "--mu", "2,1", "--p", "3"]).status.code(), Some(1));
    assert_eq!(run(&["ext", "--lambda", "3,0", "--mu", "2,1", "--p", "6"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn certificates() {
    let o = run(&["certify-fm", "--lambda", "7,3", "--mu", "4,3,3", "--p", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["certificate"]["gamma"], serde_json::json!([2]));
    assert_eq!(json["certificate"]["e"], 1);
    assert!(json["certificate"]["witness"]["mult"].is_array());
    let o = run(&["certify-fm", "--lambda", "4", "--mu", "2,2", "--p", "5"]);
    assert_eq!(stdout(&o).trim(), "absent");
    let o = run(&["certify-cp", "--lambda", "3", "--mu", "2,1", "--p", "3", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["certificate"]["d"], 1);
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&run(&["gldim", "--n", "2", "--r", "12", "--l", "5"])).trim(), "4");
    assert_eq!(stdout(&run(&["gldim", "--n", "3", "--r", "9", "--l", "3"])).trim(), "12");
    assert_eq!(run(&["gldim", "--n", "4", "--r", "9", "--l", "3"]).status.code(), Some(2));
    assert_eq!(stdout(&run(&["mullineux", "--lambda", "3,1", "--l", "5"])).trim(), "(2,1,1)");
    assert_eq!(stdout(&run(&["dvalue", "--lambda", "6,0", "--l", "2"])).trim(), "d = 3");
    assert!(stdout(&run(&["cut", "--lambda", "5,5,1,1", "--mu", "6,4,2"])).contains("horizontal block 1"));
    assert_eq!(stdout(&run(&["hom", "--lambda", "3,0", "--mu", "2,1", "--p", "3"])).lines().last(), Some("1"));
    assert!(run(&["euler-check", "--lambda", "6,0", "--mu", "3,3", "--p", "2"]).status.success());
    assert!(run(&["blocks", "--lambda", "3,0", "--mu", "2,1", "--l", "3"]).status.success());
    assert!(run(&["koppinen", "--lambda", "5,1", "--mu", "4,2", "--p", "3"]).status.success());
    assert_eq!(run(&["koppinen", "--lambda", "4,0", "--mu", "2,2", "--p", "3"]).status.code(), Some(1));
    let o = run(&["wen", "--lambda", "35,28,21,14,7,0", "--l", "7", "--d", "2", "--i", "1", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().last(), Some("0,2"));
}

#[test]
fn oracle_matches_hom() {
    let o = run(&["oracle-hom", "--lambda", "3,0", "--mu", "2,1", "--p", "3", "--trace", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["dim"], 1);
    assert_eq!(json["modules"].as_array().unwrap().len(), 2);
}

#[test]
fn transfer_windows() {
    let o = run(&["transfer", "--lambda", "3", "--mu", "2,1", "--p", "3", "--m", "0..1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["results"][0]["value"], 1);
    assert!(json["results"][1]["window_ok"].as_bool().unwrap());
    let o = run(&["transfer", "--lambda", "3,1", "--mu", "2,2", "--p", "3", "--m", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json["results"][0]["value"].is_null());
    assert!(!json["results"][0]["caveats"].as_array().unwrap().is_empty());
    let o = run(&[
        "transfer", "--lambda", "5,5,1,1", "--mu", "6,4,2", "--p", "5", "--m", "0", "--side", "hecke", "--target",
        "simple",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["transfer", "--lambda", "5,5,1,1", "--mu", "6,4,2", "--p", "5", "--m", "0", "--side", "schur"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn table_examples() {
    let o = run(&["table", "--r", "6", "--p", "2", "--m", "0..6", "--format", "csv"]);
    let text = stdout(&o);
    let dims: Vec<&str> =
        text.lines().filter(|l| l.starts_with("\"6,0\",\"3,3\"")).map(|l| l.split(',').nth(5).unwrap()).collect();
    assert_eq!(dims, vec!["1", "1", "1", "1", "0", "0", "0"]);
    let o = run(&["table", "--r", "3", "--p", "7", "--format", "csv"]);
    for line in data_lines(&stdout(&o)).into_iter().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let diagonal = cells[0..2] == cells[2..4];
        assert_eq!(cells[5], if diagonal { "1" } else { "0" }, "{line}");
    }
    assert_eq!(run(&["table", "--r", "0..40", "--p", "2", "--cap", "10"]).status.code(), Some(1));
    let a = stdout(&run(&["table", "--r", "0..12", "--p", "3", "--format", "json"]));
    let b = stdout(&run(&["table", "--r", "0..12", "--p", "3", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn disk_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["ext", "--lambda", "6,0", "--mu", "3,3", "--p", "2", "--format", "csv"];
    let first =
        Command::new(env!("CARGO_BIN_EXE_weylext")).args(args).env("WEYLEXT_CACHE_DIR", dir.path()).output().unwrap();
    let file = fs::read_to_string(dir.path().join("weylext-cache.txt")).unwrap();
    assert!(file.lines().any(|l| l == "nabla-nabla|p=2|l=2|6,0|3,3|m=2=1"), "{file}");
    let second =
        Command::new(env!("CARGO_BIN_EXE_weylext")).args(args).env("WEYLEXT_CACHE_DIR", dir.path()).output().unwrap();
    assert_eq!(stdout(&first), stdout(&second));
}
