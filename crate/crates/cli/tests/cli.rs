use std::process::{Command, Output};

fn tmoyal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tmoyal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn required_suite_passes_with_json() {
    let out = tmoyal(&["verify", "--suite", "jacobi", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "jacobi");
    assert_eq!(v["summary"]["pass"], 8);
}

#[test]
fn audit_failures_keep_exit_zero() {
    let out = tmoyal(&["verify", "--suite", "appendix-a"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn coarse_quadrature_fails_required_suite() {
    let out = tmoyal(&["verify", "--suite", "numeric", "--nodes", "8"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--suite", "leibniz", "--samples", "20", "--format", "json"];
    assert_eq!(stdout(&tmoyal(&args)), stdout(&tmoyal(&args)));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["verify", "--suite", "states", "--max-level", "40"],
        &["eval", "--expr", "2 G^", "--at", "0,0"],
        &["eval", "--expr", "1", "--at", "0"],
    ] {
        let out = tmoyal(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn eval_ground_state() {
    let out = tmoyal(&["eval", "--expr", "2 G^1", "--at", "0.3,-0.2"]);
    assert_eq!(out.status.code(), Some(0));
    let re: f64 = stdout(&out).split_whitespace().next().unwrap().parse().unwrap();
    assert!((re - 2.0 * (-0.13f64).exp()).abs() < 1e-12);
}

#[test]
fn spectrum_table_at_zero_twist() {
    let out = tmoyal(&["spectrum", "--side", "right", "--max-level", "3", "--omega-zero", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    let text = stdout(&tmoyal(&["spectrum", "--side", "left", "--max-level", "1", "--omega-zero"]));
    assert!(text.contains("3/2 θ^1"));
}
