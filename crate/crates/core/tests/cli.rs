use std::fs;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_ccc-spectra");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_d14() {
    let o = run(&["analyze", "dihedral:n=7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["energy"]["le_cn"], "6");
    assert_eq!(v["energy"]["le_plus_cn"], "5");
    assert_eq!(v["classification"]["cnl_status"], "below");
    assert_eq!(v["classification"]["cnsl_status"], "below");
    assert_eq!(v["closed_form_agrees"], true);
}

#[test]
fn analyze_named_values() {
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["analyze", "dicyclic:n=2"]).stdout).unwrap();
    for k in ["e_cn", "le_cn", "le_plus_cn"] {
        assert_eq!(v["energy"][k], "0");
    }
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["analyze", "semidihedral:n=2"]).stdout).unwrap();
    assert_eq!(v["energy"]["le_plus_cn"], "28/5");
}

#[test]
fn analyze_rejects_bad_input() {
    let o = run(&["analyze", "dihedral:n=2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(run(&["analyze", "unm:n=3,m=2"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "nonsense"]).status.code(), Some(2));
}

#[test]
fn sweep_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = run(&[
            "sweep",
            "--family",
            "dicyclic:n=*",
            "--range",
            "2..20",
            "--oracle",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,params,vertices,e_cn,le_cn,le_plus_cn,e_cn_f,le_cn_f,le_plus_cn_f,cnl_status,cnsl_status,ordering,oracle"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 19);
    assert!(rows.iter().all(|r| r.ends_with(",match")));
    assert!(rows[2].starts_with("dicyclic,n=4,5,4,36/5,28/5,"));
}

#[test]
fn sweep_json_and_step() {
    let o = run(&[
        "sweep",
        "--family",
        "dihedral:n=*",
        "--range",
        "3..11",
        "--step",
        "4",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let params: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["params"].as_str().unwrap())
        .collect();
    assert_eq!(params, ["n=3", "n=7", "n=11"]);
    assert_eq!(v[2]["le_cn"], "40");
    assert_eq!(v[2]["cnl_status"], "border");
}

#[test]
fn sweep_two_ranges_and_bad_range() {
    let o = run(&["sweep", "--family", "unm:n=2..3,m=*", "--range", "3..4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(
        run(&["sweep", "--family", "dihedral:n=*", "--range", "9..3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sweep", "--family", "dihedral:n=*"]).status.code(),
        Some(2)
    );
}

#[test]
fn order_cap_from_env() {
    let o = Command::new(BIN)
        .args(["sweep", "--family", "dihedral:n=*", "--range", "3..40"])
        .env("CCC_ORDER_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn figure_preset() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig3.csv");
    let o = run(&["figure", "fig3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("57/57"));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 20);
    assert_eq!(run(&["figure", "fig12"]).status.code(), Some(2));
}

#[test]
fn verify_quick_reports_the_v32_claim() {
    let o = run(&["verify", "quick"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(1));
    assert!(text.contains("FAIL [claims] v8n:n=4"));
    assert_eq!(text.matches("FAIL ").count(), 1);
}
