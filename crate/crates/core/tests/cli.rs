use std::process::{Command, Output};

fn qdirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdirac")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
}

#[test]
fn list_suites() {
    let out = qdirac(&["list-suites"]);
    assert!(out.status.success());
    let names: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(str::to_owned).collect();
    assert_eq!(names.len(), 11);
    assert!(names.contains(&"conservation".to_string()));
    assert_eq!(names.last().unwrap(), "all");
}

#[test]
fn json_report_shape() {
    let out = qdirac(&["verify", "algebra", "--seed", "1", "--trials", "20", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "algebra");
    assert_eq!(v["seed"], 1);
    assert_eq!(v["pass"], true);
    assert_eq!(v["config"]["trials"], 20);
    assert_eq!(v["config"]["n_set"], serde_json::json!([-1, 0, 1, 2]));
    let case = &v["cases"][0];
    let residual = case["max_residual"].as_str().unwrap();
    assert!(residual.contains('e'), "{residual}");
    residual.parse::<f64>().unwrap();
    assert!(v["elapsed"].is_number());
}

#[test]
fn same_seed_same_report() {
    let args = ["verify", "equivalence", "--seed", "9", "--trials", "30", "--format", "json"];
    let (mut a, mut b) = (json(&qdirac(&args)), json(&qdirac(&args)));
    a.as_object_mut().unwrap().remove("elapsed");
    b.as_object_mut().unwrap().remove("elapsed");
    assert_eq!(a, b);
    let mut c = json(&qdirac(&["verify", "equivalence", "--seed", "10", "--trials", "30", "--format", "json"]));
    c.as_object_mut().unwrap().remove("elapsed");
    assert_ne!(a, c);
}

#[test]
fn unreachable_tolerance_fails() {
    let out = qdirac(&["verify", "algebra", "--tol", "1e-30", "--trials", "10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    let failing = v["cases"].as_array().unwrap().iter().find(|c| c["pass"] == false).unwrap();
    assert!(failing["max_residual"].as_str().unwrap().parse::<f64>().unwrap() > 1e-30);
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qdirac(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(qdirac(&["verify", "algebra", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(qdirac(&["verify", "algebra", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(qdirac(&["verify", "algebra", "--bogus"]).status.code(), Some(2));
    assert_eq!(qdirac(&[]).status.code(), Some(2));
}

#[test]
fn n_set_and_text_format() {
    let out = qdirac(&["verify", "invariance", "--n", "-1,3", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("residual_n=-1"));
    assert!(text.contains("residual_n=3"));
    assert!(!text.contains("residual_n=0"));
    assert!(text.contains("PASS"));
}

#[test]
fn grid_too_coarse_is_reported() {
    let out = qdirac(&["verify", "conservation", "--grid-h", "2.5", "--trials", "5", "--format", "json"]);
    let v = json(&out);
    let fd = v["cases"].as_array().unwrap().iter().find(|c| c["name"] == "fd_operator_order2").unwrap();
    assert_eq!(fd["pass"], false);
    assert_eq!(out.status.code(), Some(1));
}
