use std::process::{Command, Output};

use serde_json::Value;

fn preper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_preper")).args(args).env_remove("PREPER_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn check<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap_or_else(|| panic!("no check {id}"))
}

#[test]
fn graph_dot_for_minus_29_16() {
    let o = preper(&["graph", "--c", "-29/16", "--format", "dot"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("digraph preper {"));
    assert_eq!(s.lines().filter(|l| l.contains("[label=")).count(), 8);
    assert_eq!(s.matches("peripheries=2").count(), 3);
    assert_eq!(s.lines().filter(|l| l.contains(" -> ")).count(), 8);
    assert!(s.contains("\"3/4\" -> \"-5/4\";"));
}

#[test]
fn graph_json_for_one_is_empty() {
    let o = preper(&["graph", "--c", "1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 0);
    assert_eq!(v["count_with_infinity"], 1);
}

#[test]
fn bad_rational_is_a_usage_error() {
    let o = preper(&["graph", "--c", "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(preper(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn scan_is_independent_of_jobs() {
    let one = preper(&["scan", "--height", "12", "--jobs", "1", "--format", "table"]);
    let many = preper(&["scan", "--height", "12", "--jobs", "8", "--format", "table"]);
    assert!(one.status.success() && many.status.success());
    assert_eq!(one.stdout, many.stdout);

    let a = json(&preper(&["scan", "--height", "12", "--jobs", "1"]));
    let b = json(&preper(&["scan", "--height", "12", "--jobs", "8"]));
    assert_eq!(a["data"], b["data"]);
    assert_eq!(a["checks"], b["checks"]);
}

#[test]
fn scan_reads_jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_preper"))
        .args(["scan", "--height", "5", "--format", "table"])
        .env("PREPER_JOBS", "3")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(o.stdout, preper(&["scan", "--height", "5", "--format", "table"]).stdout);
}

#[test]
fn family_p3_at_one() {
    let o = preper(&["family", "p3", "--param", "1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["data"]["c"], "-29/16");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn curve_points_on_c1_32() {
    let o = preper(&["curve-points", "--curve", "c1_32", "--height", "1000"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["data"]["count"], 8);
}

#[test]
fn jacobian_orders() {
    let v = json(&preper(&["jacobian", "--p", "5"]));
    assert_eq!(v["data"]["order"], 43);
    assert_eq!(v["data"]["n1"], 8);
    assert_eq!(v["data"]["n2"], 32);
    assert_eq!(json(&preper(&["jacobian", "--p", "3"]))["data"]["order"], 27);
    assert_eq!(preper(&["jacobian", "--p", "743"]).status.code(), Some(1));
}

#[test]
fn verify_padic_passes() {
    let o = preper(&["verify", "padic"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(check(&json(&o), "padic.delta")["status"], "pass");
}

#[test]
fn verify_descent_reports_the_first_f_mismatch() {
    let o = preper(&["verify", "descent"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(check(&v, "descent.norm.beta2")["status"], "pass");
    assert_eq!(check(&v, "descent.743.two_minus_t")["status"], "pass");
    assert_eq!(check(&v, "descent.743.two_minus_t_first")["status"], "fail");
}

#[test]
fn verify_curves_flags_e24() {
    let o = preper(&["verify", "curves", "--search-height", "200"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let c = check(&v, "e24.points.on_curve");
    assert_eq!(c["status"], "fail");
    assert!(c["note"].as_str().is_some_and(|n| n.contains("-1")));
    assert_eq!(check(&v, "e11.points.complete")["status"], "pass");
}

#[test]
fn report_round_trips_byte_for_byte() {
    for args in [&["verify", "padic"][..], &["jacobian", "--p", "7"], &["family", "t12", "--param", "2"]] {
        let out = stdout(&preper(args));
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], "1.0");
        assert_eq!(v["command"].as_array().unwrap().len(), args.len());
        assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), out);
    }
}
