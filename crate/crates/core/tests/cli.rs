use std::process::{Command, Output};

fn qcap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcap")).args(args).env_remove("QCAP_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_single_case() {
    let o = qcap(&["verify", "--case", "new_fin_cap_1", "--L-max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["passed"], 9);
    assert!(String::from_utf8_lossy(&o.stderr).contains("L-max=8"));
}

#[test]
fn unknown_case_is_a_config_error() {
    let o = qcap(&["verify", "--case", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("nonsense") && err.contains("new_fin_cap_1"));
    assert!(o.stdout.is_empty());
    assert_eq!(qcap(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_all_small_grid() {
    let o = qcap(&["verify", "--all", "--L-max", "4", "--f-max", "2", "--trunc", "20", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--case", "new_fin_cap_2", "--case", "jtp", "--L-max", "5", "--trunc", "12", "--no-timing"];
    let a = qcap(&args);
    let b = qcap(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("millis"));
}

#[test]
fn text_format_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = qcap(&[
        "verify",
        "--case",
        "new_fin_cap_1",
        "--L-max",
        "2",
        "--format",
        "text",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("PASS  new_fin_cap_1 [L=0] exact"), "{text}");
    assert!(text.trim_end().ends_with("total 3 passed 3 failed 0 errors 0"));
}

#[test]
fn series_examples() {
    let cases: [(&[&str], &str); 4] = [
        (&["series", "rhs:new_fin_cap_1", "--L", "2"], "1 + q^2 - q^4"),
        (&["series", "product:jtp", "--z-shift", "0", "--trunc", "4"], "1 + 2q + 2q^4"),
        (&["series", "lhs:cap_analytic_1", "--trunc", "0"], "1"),
        (&["series", "lhs:new_fin_cap_1", "--L", "2", "--trunc", "2"], "1 + q^2"),
    ];
    for (args, want) in cases {
        let o = qcap(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
    assert_eq!(qcap(&["series", "lhs:nope"]).status.code(), Some(2));
    assert_eq!(qcap(&["series", "middle:jtp"]).status.code(), Some(2));
    assert_eq!(qcap(&["series", "lhs:new_fin_cap_1"]).status.code(), Some(2));
}

#[test]
fn partition_tables() {
    let o = qcap(&["partitions", "counts", "--m", "1", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("n,C_1,D_1,match\n"));
    assert_eq!(out.lines().count(), 42);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));

    let o = qcap(&["partitions", "weighted", "--theorem", "W1", "--n-max", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "3,2,2,true"));

    assert_eq!(qcap(&["partitions", "counts", "--m", "3", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(qcap(&["partitions", "weighted", "--theorem", "W9"]).status.code(), Some(2));
}

#[test]
fn hierarchy_command() {
    let o = qcap(&["hierarchy", "--family", "cap2", "--f", "2", "--L", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("match: true\n"));

    let o = qcap(&["hierarchy", "--f", "3", "--s", "2", "--L", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("first_bailey_application:") && out.contains("after_k_transform_2:"));

    assert_eq!(qcap(&["hierarchy", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(qcap(&["hierarchy", "--family", "cap2", "--s", "1"]).status.code(), Some(2));
}
