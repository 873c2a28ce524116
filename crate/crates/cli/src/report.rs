use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedWindow,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedWindow => "skipped-window",
        }
    }
}

/// Outcome of one check at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub values: Value,
    pub ms: u64,
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.status == Status::Pass)
}

pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn table(reports: &[Report]) -> String {
    let rows: Vec<(String, String, &str, String)> = reports
        .iter()
        .map(|r| {
            let params = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
            (r.check.clone(), params, r.status.as_str(), format!("{} ms", r.ms))
        })
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(5);
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(6);
    let mut out = String::new();
    let _ = writeln!(out, "{:<w0$}  {:<w1$}  {:<14}  time", "check", "params", "status");
    for (c, p, s, t) in &rows {
        let _ = writeln!(out, "{c:<w0$}  {p:<w1$}  {s:<14}  {t}");
    }
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let _ = writeln!(out, "{passed}/{} passed", reports.len());
    out
}
