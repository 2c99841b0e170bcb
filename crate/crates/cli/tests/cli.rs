use std::process::{Command, Output};

fn pauli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pauli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn report_json(args: &[&str]) -> (i32, serde_json::Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--json", &p]);
    let o = pauli(&full);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("no report: {}", String::from_utf8_lossy(&o.stderr)));
    (
        o.status.code().unwrap(),
        serde_json::from_str(&text).unwrap(),
    )
}

#[test]
fn verify_pauli_matrix_reports_order_sixteen() {
    let (code, v) = report_json(&["verify", "pauli-matrix"]);
    assert_eq!(code, 0);
    let first = &v[0];
    assert_eq!(first["check_id"], "pauli-matrix/01-closure-order");
    assert_eq!(first["status"], "PASS");
    assert_eq!(first["metrics"]["order"], 16.0);
}

#[test]
fn verify_presentations_records_the_audit() {
    let (code, v) = report_json(&["verify", "presentations", "--coset-bound", "1000"]);
    assert_eq!(code, 0);
    let audit = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["check_id"] == "presentations/09-xyz-audit")
        .unwrap();
    assert_eq!(audit["status"], "RECORDED");
    assert_eq!(audit["metrics"]["max_bound"], 1000.0);
}

#[test]
fn verify_output_is_stable_and_sorted() {
    let args = ["verify", "svk"];
    let (_, a) = report_json(&args);
    let (_, b) = report_json(&args);
    assert_eq!(a, b);
    let ids: Vec<&str> = a
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["check_id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
}

#[test]
fn tc_bundled_files() {
    let o = pauli(&["tc", "z4.pres"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order 4"));
    let o = pauli(&["tc", "seifquo.pres"]);
    assert!(stdout(&o).contains("order 16"));
    let (code, v) = report_json(&["tc", "q8_free_z4.pres", "--coset-bound", "1000"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["status"], "BOUND_EXCEEDED");
}

#[test]
fn tc_parse_error_reports_line_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pres");
    std::fs::write(&path, "gens: a b\nrel: a^2\nrel: c\n").unwrap();
    let o = pauli(&["tc", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn tc_table_dump() {
    let o = pauli(&["tc", "z4.pres", "--table"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"table\""));
}

#[test]
fn pf_sample_point() {
    let (code, v) = report_json(&["pf", "--omega", "5", "--theta", "0", "--delta", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["status"], "PASS");
    assert!((v[0]["metrics"]["eigenvalue_lower"].as_f64().unwrap() + 2.0).abs() < 1e-12);
    assert!((v[0]["metrics"]["eigenvalue_upper"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn pf_limit_point() {
    let (code, v) = report_json(&["pf", "--omega", "1", "--theta", "0", "--delta", "0"]);
    assert_eq!(code, 0);
    let u = &v[0]["witnesses"]["u"];
    assert!((u[0][1][1].as_f64().unwrap() + 1.0).abs() < 1e-14);
    assert!((u[1][0][1].as_f64().unwrap() + 1.0).abs() < 1e-14);
}

#[test]
fn pf_invalid_regime_fails_with_exit_one() {
    let (code, v) = report_json(&["pf", "--omega", "1", "--delta", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v[0]["status"], "FAIL");
    assert_eq!(v[0]["witnesses"]["error"], "InvalidRegime");
}

#[test]
fn pf_sweep_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    std::fs::write(
        &path,
        r#"[{"omega_abs": 2, "theta": 1, "delta": -1, "alpha": 1}, {"omega_abs": 5, "theta": 0, "delta": 3}]"#,
    )
    .unwrap();
    let (code, v) = report_json(&["pf", "--sweep", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pauli(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(pauli(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        pauli(&["product", "central", "Q8", "S3"]).status.code(),
        Some(2)
    );
}

#[test]
fn act_and_product() {
    let (code, v) = report_json(&["act", "--samples", "50"]);
    assert_eq!(code, 0);
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "PASS"));
    let (code, v) = report_json(&["product", "central", "D8", "Z4"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["metrics"]["order"], 16.0);
    assert_eq!(v[0]["metrics"]["isomorphic_to_pauli"], 1.0);
}

#[test]
fn dump_data_writes_every_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = pauli(&["dump-data", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    for name in [
        "pauli_xyz",
        "pauli_uxy",
        "q8",
        "z4",
        "d8",
        "seifquo",
        "q8_free_z4",
    ] {
        let text = std::fs::read_to_string(dir.path().join(format!("{name}.pres"))).unwrap();
        assert!(text.contains("gens:"));
    }
}

#[test]
fn json_to_stdout_is_the_only_stdout() {
    let o = pauli(&["verify", "pauli-matrix", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("stdout is pure JSON");
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("PASS"));
}
