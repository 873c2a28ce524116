use std::path::PathBuf;
use std::process::{Command, Output};

use pdg_verify::{plan, plan_all, run, Config, Flags, Status};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_pdg-verify"));
    c.env_remove("PDG_VERIFY_CONFIG");
    c
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pdg-verify-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run_json(args: &[&str], name: &str) -> (Output, Vec<Value>) {
    let path = tmp(name);
    let out = bin().args(args).arg("--json").arg(&path).output().unwrap();
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (out, json.as_array().unwrap().clone())
}

#[test]
fn lima_example() {
    let (out, reports) = run_json(&["verify-lima", "--p", "2", "--a", "1", "--b", "1"], "lima.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r["check"], "verify-lima");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["values"]["dim"], 2);
    assert_eq!(r["values"]["lima"], serde_json::json!(["[]", "[2,2]"]));
    assert_eq!(r["params"], serde_json::json!({ "a": 1, "b": 1, "p": 2 }));
    assert!(r["ms"].is_u64());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("verify-lima") && stdout.contains("1/1 passed"));
}

#[test]
fn binom_example() {
    let out = bin().args(["verify-binom", "--p", "5", "--max", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn slash_example() {
    let (out, reports) = run_json(&["verify-slash", "--p", "3", "--n", "2", "--cap", "40"], "slash.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(reports[0]["values"]["h0"], serde_json::json!([[0, 1]]));
    assert_eq!(reports[0]["values"]["higher_vanish"], true);
}

#[test]
fn small_window_is_skipped() {
    let (out, reports) = run_json(&["verify-slash", "--p", "3", "--n", "2", "--cap", "4"], "skip.json");
    assert_eq!(reports[0]["status"], "skipped-window");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bin().arg("verify-everything").output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["verify-slash", "--p", "4"]).output().unwrap().status.code(), Some(2));
    let out = bin().args(["verify-twist", "--p", "3", "--n", "3", "--a", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("twist"));
    assert_eq!(bin().args(["verify-vi", "--p", "3", "--i", "3"]).output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["verify-thick", "--p", "3", "--a", "3"]).output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["verify-lima", "--a", "1"]).output().unwrap().status.code(), Some(2));
}

#[test]
fn failing_check_exits_1() {
    let (out, reports) = run_json(&["verify-frobenius", "--p", "3", "--a", "1", "--b", "1", "--max", "2", "--n", "4"], "frob.json");
    assert_eq!(out.status.code(), Some(1));
    let k0 = reports.iter().find(|r| r["check"] == "verify-frobenius/k0").unwrap();
    assert_eq!(k0["status"], "fail");
    assert_eq!(k0["values"]["generator_shifted_passes"], true);
    for name in ["hom", "kernel", "section"] {
        let r = reports.iter().find(|r| r["check"] == format!("verify-frobenius/{name}")).unwrap();
        assert_eq!(r["status"], "pass", "{name}");
    }
}

#[test]
fn json_is_stable() {
    let args = ["verify-vi", "--p", "3", "--jobs", "2"];
    let strip = |mut v: Vec<Value>| {
        for r in &mut v {
            r.as_object_mut().unwrap().remove("ms");
        }
        v
    };
    let (_, a) = run_json(&args, "stable1.json");
    let (_, b) = run_json(&args, "stable2.json");
    assert_eq!(a.len(), 6);
    assert_eq!(strip(a), strip(b));
}

#[test]
fn config_from_environment() {
    let path = tmp("custom.conf");
    std::fs::write(&path, "slash.p = 2\nslash.n = 1,3\nslash.cap = 16\n").unwrap();
    let json = tmp("custom.json");
    let out = bin().env("PDG_VERIFY_CONFIG", &path).args(["verify-slash", "--json"]).arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let params: Vec<Value> = v.as_array().unwrap().iter().map(|r| r["params"].clone()).collect();
    assert_eq!(
        params,
        vec![serde_json::json!({ "cap": 16, "n": 1, "p": 2 }), serde_json::json!({ "cap": 16, "n": 3, "p": 2 })]
    );
    let bad = tmp("bad.conf");
    std::fs::write(&bad, "slash.p = two\n").unwrap();
    assert_eq!(bin().env("PDG_VERIFY_CONFIG", &bad).arg("verify-slash").output().unwrap().status.code(), Some(2));
}

#[test]
fn default_plan_covers_every_check() {
    let specs = plan_all(&Config::builtin()).unwrap();
    for name in [
        "verify-slash",
        "verify-twist",
        "verify-lima",
        "verify-vi",
        "verify-binom",
        "verify-nilhecke",
        "verify-thick",
        "verify-grass",
        "verify-frobenius/hom",
        "verify-frobenius/kernel",
        "verify-frobenius/section",
        "verify-frobenius/k0",
        "verify-theta0",
    ] {
        assert!(specs.iter().any(|s| s.name == name), "{name}");
    }
    let twists = plan(pdg_verify::Command::Twist, &Flags::default(), &Config::builtin()).unwrap();
    // n = kp + r ≤ 6 with a ∈ 1..=r: 3 points for p = 2, 6 for p = 3
    assert_eq!(twists.len(), 9);
    let nh = plan(pdg_verify::Command::Nilhecke, &Flags::default(), &Config::builtin()).unwrap();
    assert_eq!(nh.iter().map(|s| s.params["cap"]).collect::<Vec<_>>(), vec![32, 48]);
}

#[test]
fn library_run_matches_binary_statuses() {
    let flags = Flags { p: Some(2), ..Flags::default() };
    let specs = plan(pdg_verify::Command::Theta0, &flags, &Config::builtin()).unwrap();
    let reports = run(&specs, Some(1)).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.status == Status::Pass));
    assert_eq!(reports[0].values["image"], "1*s[1,1,1,1]+1*s[2,1,1]+1*s[2,2]");
}
