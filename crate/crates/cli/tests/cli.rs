use quadwalk::series::LaurentSeries;
use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadwalk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let o = run(args);
    (serde_json::from_str(&stdout(&o)).expect("json output"), o.status.code().unwrap())
}

#[test]
fn gessel_excursion_counts() {
    let (v, code) = json(&["count", "--model", "gessel", "--max-n", "8", "--end", "0,0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["model"], "gessel");
    assert_eq!(v["maxn"], 8);
    let counts: Vec<&str> = v["counts"].as_array().unwrap().iter().map(|r| r[3].as_str().unwrap()).collect();
    assert_eq!(counts, ["1", "0", "2", "0", "11", "0", "85", "0", "782"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["model", "maxn", "counts"]);
}

#[test]
fn count_csv_matches_json() {
    let args = ["count", "--model", "kreweras", "--max-n", "5"];
    let csv = stdout(&run(&[&args[..], &["--format", "csv"]].concat()));
    let (v, _) = json(&[&args[..], &["--format", "json"]].concat());
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,i,j,count"));
    let rows: Vec<String> = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| format!("{},{},{},{}", r[0], r[1], r[2], r[3].as_str().unwrap()))
        .collect();
    assert_eq!(lines.map(String::from).collect::<Vec<_>>(), rows);
}

#[test]
fn root_series_text_and_json_agree() {
    let base = ["kernel", "--model", "gessel", "--order", "6", "--show", "roots"];
    let (v, _) = json(&[&base[..], &["--format", "json"]].concat());
    let text = stdout(&run(&[&base[..], &["--format", "text"]].concat()));
    let blocks: Vec<&str> = text.split("# Y1\n").collect();
    let y0_text = blocks[0].trim_start_matches("# Y0\n");
    let y0 = LaurentSeries::from_text(y0_text).unwrap();
    let y1 = LaurentSeries::from_text(blocks[1]).unwrap();
    let y0_json = LaurentSeries::from_json(&v["Y0"].to_string()).unwrap();
    let y1_json = LaurentSeries::from_json(&v["Y1"].to_string()).unwrap();
    assert_eq!(y0, y0_json);
    assert_eq!(y1, y1_json);
    assert_eq!(y0.to_text(), y0_text);
}

#[test]
fn verify_shapes_and_exit_codes() {
    let (v, code) = json(&["verify", "--check", "cubic", "--order", "8", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::json!({"check": "cubic", "order": 8, "pass": true}));
    let (v, code) = json(&["verify", "--check", "all", "--order", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["orbit", "sum", "reconstruct", "cubic", "critical", "annihilators", "discriminant", "theorem", "q0y-bridge"]
    );
    assert_eq!(run(&["verify", "--check", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--order"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--model", "nope", "--max-n", "3"]).status.code(), Some(2));
}

#[test]
fn multistep_checks() {
    let (v, code) = json(&["multistep", "--lambda", "2", "--order", "8", "--check", "dde", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["check"], "dde:lambda=2");
    assert_eq!(v["pass"], true);
    assert_eq!(run(&["multistep", "--lambda", "99"]).status.code(), Some(2));
}

#[test]
fn classification_flags_four() {
    let (v, code) = json(&["classify", "--all", "--format", "json"]);
    assert_eq!(code, 0);
    let flagged: Vec<&str> =
        v.as_array().unwrap().iter().filter(|e| e["predicate"] == true).map(|e| e["model"].as_str().unwrap()).collect();
    assert_eq!(flagged, ["gessel", "kreweras", "w-se-ne", "w-e-se-ne", "weighted:1"]);
    let (scan, code) = json(&["classify", "--scan", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(scan["classes"], 79);
    assert_eq!(scan["finite_group"].as_array().unwrap().len(), 23);
    assert_eq!(run(&["classify"]).status.code(), Some(2));
}

#[test]
fn report_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let p = path.to_str().unwrap();
    let o = run(&["report", "--order", "6", "--format", "csv", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let first = std::fs::read_to_string(&path).unwrap();
    let mut lines = first.lines();
    assert_eq!(lines.next(), Some("n,dp,closed_form,match"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 13);
    assert_eq!(rows[12], "12,334560525538,334560525538,true");
    run(&["report", "--order", "6", "--format", "csv", "--out", p]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    let a = stdout(&run(&["report", "--order", "6", "--format", "json"]));
    let b = stdout(&run(&["report", "--order", "6", "--format", "json"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let flagged = v["classification"].as_array().unwrap().iter().filter(|e| e["predicate"] == true).count();
    assert_eq!(flagged, 4);
    assert_eq!(v["pass"], true);
}

#[test]
fn orbit_marks_four_gessel_pairs() {
    let (v, _) = json(&["kernel", "--model", "gessel", "--order", "6", "--show", "orbit", "--format", "json"]);
    assert_eq!(v["group_order"], 8);
    let usable: Vec<String> = v["orbit"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["substitutable"] == true)
        .map(|e| format!("({}, {})", e["x"].as_str().unwrap(), e["y"].as_str().unwrap()))
        .collect();
    assert_eq!(usable, ["(x, Y0)", "(x*Y0, Y1)", "(x*Y0, x^2*Y1)", "(x^-1, x^2*Y0)"]);
}
