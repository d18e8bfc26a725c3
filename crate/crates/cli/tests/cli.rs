use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssm-kit"))
        .args(args)
        .env_remove("SSM_KIT_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn weight_text_output() {
    let o = run(&["weight", "--k", "1", "--n", "2", "--set", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + b2 - a1\n");
}

#[test]
fn empty_set_and_lambda_selectors() {
    let o = run(&["weight", "--k", "1", "--n", "2", "--set", ""]);
    assert_eq!(stdout(&o), "b1*b2 - a1*b2 - a1*b1 + a1^2\n");
    let by_set = run(&["csm-cell", "--k", "2", "--n", "4", "--set", "2", "--schur"]);
    let by_lambda = run(&["csm-cell", "--k", "2", "--n", "4", "--lambda", "3,1", "--schur"]);
    assert_eq!(stdout(&by_set), stdout(&by_lambda));
    assert_eq!(stdout(&by_set), "Sc31 + Sc41 + Sc32 + 2*Sc42 - Sc33 + Sc43\n");
}

#[test]
fn tssm_json_matches_printed_coefficients() {
    let o = run(&["tssm", "--lambda", "3,1", "--cap", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"], "schur");
    assert_eq!(v["cap"], 5);
    let terms: Vec<(Vec<u64>, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let lam = t["lambda"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (lam, t["coeff"].as_str().unwrap().to_string())
        })
        .collect();
    let expect = [(vec![3, 1], "1"), (vec![4, 1], "-4"), (vec![3, 2], "-3"), (vec![3, 1, 1], "-3")];
    let expect: Vec<(Vec<u64>, String)> = expect.into_iter().map(|(l, c)| (l, c.to_string())).collect();
    assert_eq!(terms, expect);
}

#[test]
fn poly_json_schema() {
    let o = run(&["weight", "--k", "1", "--n", "2", "--set", "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vars"], serde_json::json!(["a1", "b1", "b2"]));
    assert_eq!(
        v["terms"],
        serde_json::json!([
            {"exp": [0, 0, 0], "coeff": "1"},
            {"exp": [1, 0, 0], "coeff": "-1"},
            {"exp": [0, 0, 1], "coeff": "1"}
        ])
    );
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let o = run(&["ssm-cell", "--k", "2", "--n", "2", "--set", "", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--cap"), "{}", stderr(&o));
    let o = run(&["weight", "--k", "3", "--n", "2", "--set", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--k"));
    let o = run(&["weight", "--k", "1", "--n", "2", "--set", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--set"));
    let o = run(&["weight", "--k", "1", "--n", "2", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--bogus"));
    let o = run(&["phi", "--s", "1", "--k", "1", "--n", "2", "--method", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--method"));
    let o = run(&["cross-check", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--suite"));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ssm-kit"))
        .args(["tssm", "--lambda", "1"])
        .env("SSM_KIT_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "Sc1 - 2*Sc2 - 2*Sc11\n");
}

#[test]
fn output_is_independent_of_parallelism() {
    for args in [
        vec!["scan-alternating", "--max-weight", "3", "--cap", "6"],
        vec!["phi", "--s", "1", "--k", "2", "--n", "3", "--method", "loc", "--cap", "4", "--format", "json"],
        vec!["cross-check", "--suite", "sieve", "--cap", "4"],
    ] {
        let mut one = args.clone();
        one.extend(["--jobs", "1"]);
        let mut four = args.clone();
        four.extend(["--jobs", "4"]);
        let (a, b) = (run(&one), run(&four));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        assert_eq!(stdout(&a), stdout(&run(&one)));
    }
}

#[test]
fn phi_methods_and_sigma_routes_agree() {
    let phi: Vec<String> = ["sss", "det", "loc"]
        .iter()
        .map(|m| stdout(&run(&["phi", "--s", "1", "--k", "2", "--n", "3", "--method", m, "--cap", "5"])))
        .collect();
    assert_eq!(phi[0], phi[1]);
    assert_eq!(phi[0], phi[2]);
    let a = run(&["sigma", "--k", "2", "--n", "3", "--r", "1", "--method", "tssm", "--cap", "5"]);
    let b = run(&["sigma", "--k", "2", "--n", "3", "--r", "1", "--method", "sieve", "--cap", "5"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn scan_streams_one_line_per_partition() {
    let o = run(&["scan-alternating", "--from-weight", "2", "--max-weight", "3", "--cap", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    assert_eq!(lines, ["tssm_2", "tssm_11", "tssm_3", "tssm_21", "tssm_111"]);
}

#[test]
fn verify_axioms_passes() {
    let o = run(&["verify-axioms", "--k", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 failed\n"));
}

#[test]
fn full_cross_check_passes() {
    let o = run(&["cross-check", "--suite", "all", "--cap", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
}
