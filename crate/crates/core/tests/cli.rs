use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylowchar"))
        .args(args)
        .env_remove("SYLOWCHAR_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    (serde_json::from_slice(&out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn single_multiplicities() {
    let out = run(&["multiplicity", "--p", "3", "--n", "9", "--lambda", "5,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0");
    let out = run(&["multiplicity", "--p", "3", "--n", "9", "--lambda", "9"]);
    assert_eq!(stdout(&out).trim(), "1");
    let (v, _) = json(&["multiplicity", "--p", "3", "--n", "9", "--lambda", "2^4,1"]);
    assert_eq!(v["partition"], serde_json::json!([2, 2, 2, 2, 1]));
    assert_eq!(v["multiplicity"], "0");
}

#[test]
fn full_report_schema() {
    let (v, code) = json(&["multiplicity", "--p", "3", "--n", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["prime"], 3);
    assert_eq!(v["degree"], 9);
    assert_eq!(v["entries"].as_array().unwrap().len(), 30);
    assert_eq!(v["zero_set"].as_array().unwrap().len(), 6);
    assert_eq!(v["zero_set"][5], serde_json::json!([2, 1, 1, 1, 1, 1, 1, 1]));
    assert_eq!(v["checks"]["degree_identity"], true);
    assert_eq!(v["checks"]["conjugation_symmetry"], true);
    for e in v["entries"].as_array().unwrap() {
        assert!(e["partition"].is_array());
        assert!(e["multiplicity"].as_str().unwrap().parse::<u64>().is_ok());
    }
}

#[test]
fn verification_exit_codes() {
    assert_eq!(run(&["verify", "theorem-a", "--p", "3", "--max-n", "12"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "tables", "--p", "3", "--k", "2"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "dset", "--q", "2", "--p", "3", "--k", "2"]).status.code(), Some(0));

    let out = run(&["verify", "dset", "--q", "2", "--p", "5", "--k", "1", "--expect-unequal"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("A != D"));
    assert!(stdout(&out).contains("witness"));
    let out = run(&["verify", "dset", "--q", "2", "--p", "5", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["verify", "dset", "--q", "2", "--p", "3", "--k", "2", "--expect-unequal"]);
    assert_eq!(out.status.code(), Some(1));

    let (v, code) = json(&["verify", "prime-power", "--p", "5", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["found"][0], serde_json::json!([24, 1]));
    assert_eq!(v["found"].as_array().unwrap().len(), 2);
    assert_eq!(v["scanned"], 1958);
}

#[test]
fn lr_and_omega() {
    assert_eq!(stdout(&run(&["lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"])).trim(), "2");
    assert_eq!(stdout(&run(&["lr", "--lambda", "6", "--mu", "3", "--nu", "3"])).trim(), "1");
    assert_eq!(stdout(&run(&["lr-types", "--outer", "2,2", "--inner", "1"])).trim(), "[(2,1)]");
    let (v, _) = json(&["lr-types", "--outer", "2,1", "--inner", "1"]);
    assert_eq!(v["types"], serde_json::json!([[2], [1, 1]]));
    let out = run(&["omega", "--q", "3", "--lambda", "9,8,7,7,6,4,4,3"]);
    assert_eq!(stdout(&out).trim(), "6,5,5,5,4,3,2,2");
    let (v, _) = json(&["omega", "--q", "3", "--lambda", "9,8,7,7,6,4,4,3"]);
    assert_eq!(v["zeta"], 2);
}

#[test]
fn sylow_classes_and_counts() {
    let (v, code) = json(&["sylow-classes", "--p", "3", "--n", "9", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    assert_eq!(v["order"], "81");
    assert_eq!(v["oracle_match"], true);
    let total: u64 = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["count"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 81);
    assert_eq!(stdout(&run(&["constituent-count", "--p", "3", "--n", "12"])).trim(), "77");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["multiplicity", "--p", "3"]).status.code(), Some(2));
    assert_eq!(run(&["multiplicity", "--p", "2", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["lr", "--lambda", "2,3", "--mu", "1", "--nu", "4"]).status.code(), Some(2));
    assert_eq!(run(&["omega", "--q", "2", "--lambda", "3,1,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "tables", "--p", "5", "--k", "1"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_sylowchar"))
        .args(["multiplicity", "--p", "3", "--n", "9"])
        .env("SYLOWCHAR_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--threads", "1", "multiplicity", "--p", "3", "--n", "18", "--json"]);
    let b = run(&["--threads", "4", "multiplicity", "--p", "3", "--n", "18", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--threads", "3", "verify", "dset", "--q", "3", "--p", "3", "--k", "1", "--json"]);
    let d = run(&["verify", "dset", "--q", "3", "--p", "3", "--k", "1", "--json"]);
    assert_eq!(c.stdout, d.stdout);
}
