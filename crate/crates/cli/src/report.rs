//! Report envelope and CSV mirrors. Every JSON document carries the
//! schema version, the tool version and the full flag set, so a run can
//! be reproduced from its own output.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use h43_core::search::SearchRow;
use h43_core::verify::{CheckResult, Status};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct Report<'a, T: Serialize> {
    pub schema_version: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub flags: BTreeMap<String, String>,
    pub results: &'a [T],
    pub timing_ms: u128,
}

impl<'a, T: Serialize> Report<'a, T> {
    pub fn new(
        command: &'static str,
        flags: impl IntoIterator<Item = (String, String)>,
        results: &'a [T],
        timing_ms: u128,
    ) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            flags: flags.into_iter().collect(),
            results,
            timing_ms,
        }
    }

    /// Writes pretty JSON when a path was given; silently skips otherwise.
    pub fn write_json(&self, path: Option<&Path>) -> Result<(), String> {
        let Some(path) = path else { return Ok(()) };
        let mut text =
            serde_json::to_string_pretty(self).map_err(|e| format!("serializing report: {e}"))?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))
    }
}

pub fn verify_csv(path: &Path, results: &[CheckResult]) -> Result<(), String> {
    let mut w =
        csv::Writer::from_path(path).map_err(|e| format!("opening {}: {e}", path.display()))?;
    w.write_record(["id", "status", "m_lo", "m_hi", "detail"])
        .map_err(|e| e.to_string())?;
    for r in results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        };
        let (lo, hi) = r
            .m_range
            .map(|(lo, hi)| (lo.to_string(), hi.to_string()))
            .unwrap_or_default();
        w.write_record([r.id.as_str(), status, &lo, &hi, r.detail.as_str()])
            .map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}

pub fn search_csv(path: &Path, rows: &[SearchRow]) -> Result<(), String> {
    let mut w =
        csv::Writer::from_path(path).map_err(|e| format!("opening {}: {e}", path.display()))?;
    w.write_record([
        "m",
        "rho_prime",
        "best_rho",
        "gap",
        "configs",
        "h43_free",
        "best_graph6",
    ])
    .map_err(|e| e.to_string())?;
    for r in rows {
        let fmt_opt = |v: Option<f64>| v.map(|x| format!("{x:.12}")).unwrap_or_default();
        w.write_record([
            r.m.to_string(),
            format!("{:.12}", r.rho_prime),
            fmt_opt(r.best_rho),
            fmt_opt(r.gap),
            r.configs.to_string(),
            r.h43_free.to_string(),
            r.best_graph6.clone().unwrap_or_default(),
        ])
        .map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}
