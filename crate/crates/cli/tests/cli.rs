use std::io::Write;
use std::process::{Command, Output};

use lseries_lab::cgeom::{appendix_expectations, Expected};
use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lseries-lab"))
        .args(args)
        .env_remove("LSERIES_LAB_CONFIG")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

#[test]
fn characters_listing() {
    let out = lab(&["characters", "4", "--real", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(
        v[1],
        serde_json::json!({"q": 4, "real": true, "principal": false, "conductor": 4, "values": [0, 1, 0, -1]})
    );

    let out = lab(&["characters", "1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = lab(&["characters", "5", "--format", "json"]);
    assert_eq!(json(&out)[1]["values"][2], serde_json::json!([4, 1]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&lab(&["characters", "0"])), 2);
    assert_eq!(code(&lab(&["characters", "x"])), 2);
    assert_eq!(code(&lab(&["lfun", "eval", "-q", "2", "-k", "0", "-s", "1"])), 2);
    assert_eq!(code(&lab(&["lfun", "eval", "-q", "4", "-k", "2", "-s", "1"])), 2);
    assert_eq!(code(&lab(&["lfun", "eval", "-q", "4", "-k", "1", "-s", "two"])), 2);
    assert_eq!(code(&lab(&["lfun", "eval", "-q", "4", "-k", "1", "-s", "-1.5"])), 2);
    assert_eq!(code(&lab(&["lfun", "scan", "-q", "5", "-k", "1", "--all"])), 2);
    assert_eq!(code(&lab(&["audit", "-q", "4", "-k", "1", "-s", "0.5", "-N", "100,10"])), 2);
    assert_eq!(code(&lab(&["survey", "--qmax", "4", "--grid-step", "0"])), 2);
    assert_eq!(code(&lab(&["pappus", "check", "-q", "4", "-k", "1", "-s", "0.5", "-N", "0"])), 2);
}

#[test]
fn lfun_eval_values() {
    let out = lab(&["lfun", "eval", "-q", "4", "-k", "1", "-s", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let re = v["value"]["re"].as_f64().unwrap();
    assert!((re - std::f64::consts::FRAC_PI_4).abs() < 1e-8);
    assert_eq!(v["method"], "grouped");

    let out = lab(&["lfun", "eval", "-q", "4", "-k", "1", "-s", "0.5+14i"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("hurwitz"));

    let out = lab(&["lfun", "eval", "-q", "1", "-s", "2", "--format", "csv"]);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert!(row[3].starts_with("1.64493406684822"), "{text}");
}

#[test]
fn lfun_scan_exit_status() {
    let out = lab(&["lfun", "scan", "-q", "4", "-k", "1"]);
    assert_eq!(code(&out), 0);
    let out = lab(&["lfun", "scan", "-q", "4", "-k", "1", "--format", "csv", "--grid-step", "0.1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "q,char_index,sigma,L_value,err_estimate");
    assert_eq!(text.lines().count(), 1 + 9);
    let out = lab(&["lfun", "scan", "-q", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["sign_changes"], 0);
}

#[test]
fn appendix_verification() {
    let out = lab(&["geom", "verify-appendix"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));

    let out = lab(&["geom", "verify-appendix", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let checks = json(&out);
    assert!(checks.as_array().unwrap().len() >= 18);
    assert!(checks.as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn corrupted_expected_table_fails() {
    let mut table = appendix_expectations();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(serde_json::to_string(&table).unwrap().as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    assert_eq!(code(&lab(&["geom", "verify-appendix", "--expected", &path])), 0);

    let slot = table.iter_mut().find(|c| c.quantity == "dot_ab_ac").unwrap();
    slot.expected = Expected::Value { re: 9.0, im: 2.0 };
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    bad.write_all(serde_json::to_string(&table).unwrap().as_bytes()).unwrap();
    let out = lab(&["geom", "verify-appendix", "--expected", bad.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));

    assert_eq!(code(&lab(&["geom", "verify-appendix", "--expected", "/nonexistent/table.json"])), 2);
}

#[test]
fn pappus_reports() {
    let out = lab(&["pappus", "check", "-q", "4", "-k", "1", "-s", "0.7", "-N", "1,1000", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert!(v[1]["rel_residual"].as_f64().unwrap() < 1e-9);
    assert!(v[1]["S"]["re"].is_number() && v[1]["V"]["im"].is_number());

    let out = lab(&["pappus", "check", "-q", "4", "-k", "1", "-s", "0.7", "-N", "10", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn audit_reports_all_claims() {
    let out = lab(&["audit", "-q", "4", "-k", "1", "-s", "0.5", "-N", "100,1000,10000", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let claims = v.as_array().unwrap();
    assert_eq!(claims.len(), 8);
    let verdict = |id: &str| {
        claims.iter().find(|c| c["claim_id"] == id).unwrap()["verdict"].as_str().unwrap().to_string()
    };
    assert_eq!(verdict("PHASE_SUM_DIVERGES_T0"), "diverges-linear");
    assert_eq!(verdict("TRANSFORMED_EQ_POSITIVITY"), "positive-definite");
    assert_eq!(verdict("NONVANISHING_SCAN"), "no-zero-found");
    for c in claims {
        for key in ["claim_id", "inputs", "evidence", "verdict", "note"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }

    let out = lab(&["audit", "-q", "4", "-k", "1", "-s", "0.5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2 + 8);
}

#[test]
fn survey_rows() {
    let out = lab(&["survey", "--qmax", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out), serde_json::json!([]));

    let out = lab(&["survey", "--qmax", "50", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 98);
    assert!(rows.iter().all(|r| r.ends_with(",0")));
}

#[test]
fn config_file_sets_defaults() {
    let mut cfg = tempfile::NamedTempFile::new().unwrap();
    writeln!(cfg, "# defaults\nformat = json\ngrid_step = 0.1").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lseries-lab"))
        .args(["lfun", "scan", "-q", "4", "-k", "1"])
        .env("LSERIES_LAB_CONFIG", cfg.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["grid_points"], 9);

    let out = Command::new(env!("CARGO_BIN_EXE_lseries-lab"))
        .args(["characters", "3", "--format", "csv"])
        .env("LSERIES_LAB_CONFIG", cfg.path())
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("index,"));

    let mut broken = tempfile::NamedTempFile::new().unwrap();
    writeln!(broken, "colour = blue").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lseries-lab"))
        .args(["characters", "3"])
        .env("LSERIES_LAB_CONFIG", broken.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
