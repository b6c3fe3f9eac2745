use std::path::PathBuf;
use std::process::{Command, Output};

use kuzcalc::cli::{JobSpec, Report};

fn kuzcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kuzcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kuzcalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn jac_json_round_trips() {
    let out = kuzcalc(&["jac", "--poly", "x0^3 + x1^3 + x2^3", "--json", "-q"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.schema_version, 1);
    assert!(report.certification.as_ref().unwrap().isolated);
    assert_eq!(report.to_json().unwrap(), text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["timing_ms"].is_null());
}

#[test]
fn quiet_suppresses_progress() {
    let out = kuzcalc(&["jac", "--poly", "x0^3 + x1^3", "-q"]);
    assert!(out.stderr.is_empty());
    let out = kuzcalc(&["jac", "--poly", "x0^3 + x1^3"]);
    assert!(!out.stderr.is_empty());
}

#[test]
fn singular_input_exits_2() {
    let out = kuzcalc(&["jac", "--poly", "x0^2*x1", "-q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(kuzcalc(&["bogus"]).status.code(), Some(1));
    assert_eq!(kuzcalc(&["hs-dim", "--poly", "x0^3"]).status.code(), Some(1));
    assert_eq!(kuzcalc(&["jac", "--poly", "x0^3 +"]).status.code(), Some(1));
    // csv is only offered for grid commands
    assert_eq!(kuzcalc(&["hs-dim", "--poly", "x0^3 + x1^3", "--t", "1", "--csv", "-q"]).status.code(), Some(1));
}

#[test]
fn hs_table_csv_has_one_row_per_cell() {
    let out = kuzcalc(&[
        "hs-table", "--poly", "x0^3 + x1^3 + x2^3", "--t-min", "0", "--t-max", "4", "--m-range", "-1..1", "--csv",
        "-q",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(&header[..3], ["t", "m", "total"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 5 * 3);
    for r in &rows {
        let total: usize = r[2].parse().unwrap();
        let parts: usize = (3..r.len()).map(|i| r[i].parse::<usize>().unwrap()).sum();
        assert_eq!(total, parts);
    }
}

#[test]
fn hs_dim_weighted_sextic() {
    let out = kuzcalc(&[
        "hs-dim", "--poly", "x4^2 + x0^6 + x1^6 + x2^6 + x3^6", "--weights", "1,1,1,1,3", "--degree", "6", "--t", "8",
        "--json", "-q",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["cell"]["total"], 87);
}

#[test]
fn job_file_matches_flags() {
    let job = "# cubic surface\ncommand = hs-table\npoly = x0^3 + x1^3 + x2^3 + x3^3\nt_min = 0\nt_max = 6\n";
    let path = temp_file("surface.job", job);
    let from_file = kuzcalc(&["run", path.to_str().unwrap(), "--json", "-q"]);
    let from_flags = kuzcalc(&[
        "hs-table", "--poly", "x0^3 + x1^3 + x2^3 + x3^3", "--t-min", "0", "--t-max", "6", "--json", "-q",
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    let a = Report::from_json(&stdout(&from_file)).unwrap();
    let b = Report::from_json(&stdout(&from_flags)).unwrap();
    assert_eq!(serde_json::to_value(&a.result).unwrap(), serde_json::to_value(&b.result).unwrap());

    let spec = JobSpec::from_job_text(job).unwrap();
    assert_eq!(JobSpec::from_job_text(&spec.to_job_text()).unwrap().to_job_text(), spec.to_job_text());
}

#[test]
fn job_file_without_command_is_rejected() {
    let path = temp_file("bad.job", "poly = x0^3 + x1^3\n");
    assert_eq!(kuzcalc(&["run", path.to_str().unwrap(), "-q"]).status.code(), Some(1));
}

#[test]
fn torelli_verify_and_search() {
    let verify = kuzcalc(&[
        "torelli", "verify", "--poly", "x0^3 + x1^3", "--poly2", "8*x0^3 + x1^3", "--matrix", "2,0;0,1", "--json",
        "-q",
    ]);
    assert_eq!(verify.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(v["result"]["holds"], true);

    let wrong = kuzcalc(&[
        "torelli", "verify", "--poly", "x0^3 + x1^3", "--poly2", "8*x0^3 + x1^3", "--json", "-q",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&wrong)).unwrap();
    assert_eq!(v["result"]["holds"], false);

    let search = kuzcalc(&[
        "torelli", "search", "--poly", "x0^3 + x1^3 + x2^3", "--poly2", "x0^3 + 8*x1^3 + 27*x2^3", "--strategy",
        "symbolic", "--json", "-q",
    ]);
    assert_eq!(search.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&search)).unwrap();
    assert_eq!(v["result"]["outcome"], "witness");
}
