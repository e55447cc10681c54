use std::process::{Command, Output};

fn phasespace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phasespace")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn wigner_u0_has_one_third_on_m_zero() {
    let out = phasespace(&["wigner", "--N", "3", "--state", "u0", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        let v: f64 = f[2].parse().unwrap();
        let expected = if f[0] == "0" { 1.0 / 3.0 } else { 0.0 };
        assert!((v - expected).abs() < 1e-15, "{row}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["wigner", "--N", "7", "--state", "random", "--seed", "99"];
    let (a, b) = (phasespace(&args), phasespace(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("# seed=99\n"));
}

#[test]
fn verify_all_n5_passes() {
    let out = phasespace(&["verify-all", "--N", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["unit trace", "orthogonality", "product kernel", "U marginal", "V marginal", "purity sum", "support count"] {
        assert!(text.lines().any(|l| l.contains(name) && l.contains("PASS")), "{name} missing");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn limit_cartesian_rows_decrease() {
    let out = phasespace(&["limit-cartesian", "--dims", "21,51,101", "--sigma", "1", "--delta", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let errors: Vec<f64> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("N,"))
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(errors.len(), 3);
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
}

#[test]
fn json_report_has_keys() {
    let out = phasespace(&["limit-angular", "--dims", "21,51", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["N"], serde_json::json!([21, 51]));
    assert_eq!(v["errors"].as_array().unwrap().len(), 2);
    assert_eq!(v["norm"], "max_abs");
}

#[test]
fn wigner_json_layout() {
    let out = phasespace(&["wigner", "--N", "5", "--state", "v1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["N"], 5);
    assert_eq!(v["labels"], "[-2,2]");
    assert_eq!(v["values"].as_array().unwrap().len(), 5);
}

#[test]
fn output_file_and_state_file() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    std::fs::write(&state, "[[0.6,0],[0.8,0],[0,0]]").unwrap();
    let target = dir.path().join("w.csv");
    let out = phasespace(&["wigner", "--N", "3", "--state", state.to_str().unwrap(), "--output", target.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn pegg_barnett_csv() {
    let out = phasespace(&["pegg-barnett", "--N", "3", "--theta-ref", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "m,n,number,phase"));
    assert!(text.lines().any(|l| l.starts_with("1,-1,-1.0000000000000")));
}

#[test]
fn map_u_csv() {
    let out = phasespace(&["map", "--N", "3", "--op", "U"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "m,n,re,im"));
}

#[test]
fn exit_codes() {
    assert_eq!(phasespace(&["wigner", "--N", "4", "--state", "u0"]).status.code(), Some(2));
    assert_eq!(phasespace(&["wigner", "--N", "3", "--state", "u0", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(phasespace(&["limit-cartesian", "--delta", "2"]).status.code(), Some(2));
    assert_eq!(phasespace(&["pegg-barnett", "--N", "3", "--theta-ref", "0.1"]).status.code(), Some(2));
    assert_eq!(phasespace(&["limit-angular", "--dims", "5", "--coeffs", "0,0,0,0,1"]).status.code(), Some(2));
    let missing = phasespace(&["wigner", "--N", "3", "--state", "/nonexistent/state.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(!missing.stderr.is_empty());
}
