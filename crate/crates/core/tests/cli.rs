use std::process::{Command, Output};

use serde_json::Value;

fn placto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_placto"))
        .args(args)
        .output()
        .unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn verify_commands_pass_and_end_in_a_summary() {
    for args in [
        &["verify", "tables"][..],
        &["verify", "cases", "--relations", "shifted-knuth"],
        &["verify", "plac-cases"],
        &[
            "verify", "axioms", "--system", "splac", "--n", "3", "--degree", "4",
        ],
        &["verify", "section5"],
    ] {
        let out = placto(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v = lines(&out);
        let last = v.last().unwrap();
        assert_eq!(last["pass"], true);
        assert!(last["summary"].is_string());
    }
}

#[test]
fn reports_are_deterministic() {
    let a = placto(&["verify", "cases"]);
    let b = placto(&["verify", "cases"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn case_report_names_survivor() {
    let v = lines(&placto(&["verify", "splac-cases"]));
    let case = v
        .iter()
        .find(|c| c["relation"] == "SP.3" && c["pattern"] == "a=b<c<d")
        .unwrap();
    assert_eq!(case["survivor"], "adca");
    assert_eq!(case["pass"], true);
}

#[test]
fn failing_relation_set_exits_one() {
    let dir = std::env::temp_dir().join(format!("placto-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let rels = dir.join("free.json");
    std::fs::write(&rels, "[]").unwrap();
    let report = dir.join("out.jsonl");
    let out = placto(&[
        "verify",
        "axioms",
        "--relations",
        &format!("custom:{}", rels.display()),
        "--n",
        "3",
        "--degree",
        "4",
        "--json",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(std::fs::read(&report).unwrap(), out.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(placto(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(
        placto(&["class", "--relations", "other", "12"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        placto(&["insert", "--n", "3", "124"]).status.code(),
        Some(2)
    );
    assert_eq!(
        placto(&["verify", "section5", "--n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn insert_prints_tableau_and_canonical_word() {
    let v = &lines(&placto(&["insert", "--mode", "plactic", "3121"]))[0];
    assert_eq!(
        v["tableau"]["rows"],
        serde_json::json!([["1", "1"], ["2"], ["3"]])
    );
    assert_eq!(v["canonical"], "3211");
    let v = &lines(&placto(&["insert", "--mode", "mixed", "21"]))[0];
    assert_eq!(v["tableau"]["rows"], serde_json::json!([["1", "2'"]]));
    assert_eq!(v["canonical"], "21");
}

#[test]
fn class_schur_and_lr() {
    let v = &lines(&placto(&["class", "--relations", "knuth", "132"]))[0];
    assert_eq!(v["class"], serde_json::json!(["132", "312"]));
    let v = &lines(&placto(&["schur", "--shape", "1,1", "--n", "3"]))[0];
    assert_eq!(v["free"]["terms"].as_array().unwrap().len(), 3);
    let v = &lines(&placto(&["lr", "--nu", "1", "--mu", "1", "--n", "2"]))[0];
    assert_eq!(
        v["terms"],
        serde_json::json!([{"shape": [2], "coeff": 1}, {"shape": [1, 1], "coeff": 1}])
    );
}
