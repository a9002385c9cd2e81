//! End-to-end checks of the `sumset` binary: outputs, JSON stability and
//! exit statuses.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumset"))
        .args(args)
        .env_remove("SUMSET_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn assert_round_trips(text: &str) {
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.to_string(), line);
    }
}

#[test]
fn sumset_golden_example() {
    let o = run(&["sumset", "--set", "-1,1,-4,4,6", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["sumset"], serde_json::json!([1, 3, 9, 11]));
    assert_eq!(v["bound"], 4);
    assert_eq!(v["equality"], true);
    assert_round_trips(&stdout(&o));
}

#[test]
fn sumset_modes_and_formats() {
    let o = run(&["sumset", "--set", "0,1,2,3", "--n", "2", "--mode", "distinct"]);
    assert_eq!(json(&o)["sumset"], serde_json::json!([1, 2, 3, 4, 5]));
    let o = run(&["sumset", "--set", "-2,-1,1,2", "--n", "2", "--mode", "poly", "--poly", "0,0,1"]);
    assert_eq!(json(&o)["sumset"], serde_json::json!([-3, -1, 1, 3]));
    let o = run(&["sumset", "--set", "-1,1,-4,4,6", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("set,n,mode,sumset"));
    assert!(lines.next().unwrap().contains("1 3 9 11"));
    let o = run(&["sumset", "--set", "-1,1,-4,4,6", "--n", "3", "--format", "text"]);
    assert!(stdout(&o).starts_with("{1,3,9,11}"));
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "--set", "-1,1,-3,3,-5,5,7", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["form"]["tag"], "NotExtremal");
    assert_eq!(v["report"]["slack"], 2);
    assert_round_trips(&stdout(&o));

    let v = json(&run(&["classify", "--set", "-1,1,-4,4,6", "--n", "3"]));
    assert_eq!(v["form"]["tag"], "Sn_Odd");
    assert_eq!(v["form"]["params"], serde_json::json!({"n": 3, "b": 3, "c": 6, "d": 1}));

    let v = json(&run(&["classify", "--set", "1,3,5,7,9", "--n", "2", "--mode", "distinct"]));
    assert_eq!(v["form"]["tag"], "NwedgeAP");
}

#[test]
fn zpz_selfridge() {
    let o = run(&["zpz", "--p", "7", "--selfridge", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["max_zero_sum_free"], 3);
    let o = run(&["zpz", "--p", "7", "--selfridge", "--verify", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "3");
    let v = json(&run(&["zpz", "--p", "11", "--set", "1,2,-3", "--balandraud"]));
    assert_eq!(v["bound"], 6);
    assert_eq!(v["size"], 7);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["sumset", "--set", "1,x", "--n", "2"],
        vec!["sumset", "--set", "1,1,2", "--n", "2"],
        vec!["sumset", "--set", "1,2,3", "--n", "2", "--poly", "0,1"],
        vec!["sumset", "--set", "1,2,3", "--n", "2", "--mode", "poly"],
        vec!["sumset", "--set", "1,2,3", "--n", "2", "--mode", "poly", "--poly", "0,2"],
        vec!["sumset", "--set", "1,2,3"],
        vec!["verify", "--theorem", "no-such-theorem", "--max-abs", "3"],
        vec!["zpz", "--p", "8", "--selfridge"],
        vec!["zpz", "--p", "7", "--selfridge", "--set", "1,2"],
        vec!["bogus"],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_campaign_summary() {
    let o = run(&["verify", "--theorem", "inverse-odd", "--n", "3", "--max-abs", "5", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["kind"], "summary");
    assert_eq!(v["sets"], 462);
    assert_eq!(v["falsified"], false);
    assert!(v.get("elapsed_ms").is_none());
    assert_round_trips(&stdout(&o));
}

#[test]
fn falsified_campaign_exits_two() {
    // Part (i) of the witness lemma has no witness when c_1 = -c_2.
    let o = run(&["search", "--theorem", "lemma-witness", "--n", "3", "--max-abs", "1", "--no-timing"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert_round_trips(&text);
    assert!(text.lines().any(|l| l.contains("\"counterexample\"")));
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["falsified"], true);
}

#[test]
fn reports_do_not_depend_on_workers() {
    let base = ["search", "--theorem", "inverse-n2", "--k", "3..5", "--max-abs", "5", "--no-timing"];
    let outputs: Vec<String> = ["1", "2", "8"]
        .into_iter()
        .map(|w| {
            let mut args = base.to_vec();
            args.extend(["--workers", w]);
            stdout(&run(&args))
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);

    let env = Command::new(env!("CARGO_BIN_EXE_sumset"))
        .args(base)
        .env("SUMSET_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), outputs[0]);
}

#[test]
fn spec_file_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("campaign.json");
    let out = dir.path().join("report.jsonl");
    std::fs::write(
        &spec,
        format!(
            r#"{{"theorem": "strict", "n": {{"lo": 3, "hi": 3}}, "k": {{"lo": 7, "hi": 7}}, "max_abs": 6, "output": {:?}}}"#,
            out
        ),
    )
    .unwrap();
    let o = run(&["verify", "--spec", spec.to_str().unwrap(), "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report = std::fs::read_to_string(&out).unwrap();
    assert_round_trips(&report);
    let last: Value = serde_json::from_str(report.lines().last().unwrap()).unwrap();
    assert_eq!(last["sets"], 1716);
    assert_eq!(
        run(&["verify", "--spec", spec.to_str().unwrap(), "--theorem", "strict"]).status.code(),
        Some(1)
    );
}

#[test]
fn csv_report() {
    let o = run(&["search", "--theorem", "nathanson", "--n", "2", "--k", "5", "--max-abs", "8", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(&rows.last().unwrap()[0], "summary");
    assert!(rows.iter().any(|r| &r[6] == "NwedgeAP"));
}
