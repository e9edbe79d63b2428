//! JSON and CSV serialization of sweep results.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::sweep::{OpenCase, Row, SweepConfig};

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 10] = [
    "spec",
    "n",
    "m",
    "beta",
    "pred_lo",
    "pred_hi",
    "theorem",
    "witness_size",
    "flags",
    "ms",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformanceReport {
    pub schema: u32,
    /// Seconds since the Unix epoch. The only field that varies between runs
    /// apart from per-row `ms`.
    pub generated_at: u64,
    pub config: SweepConfig,
    pub summary: Summary,
    pub rows: Vec<Row>,
}

impl ConformanceReport {
    pub fn new(config: SweepConfig, rows: Vec<Row>) -> Self {
        let summary = Summary {
            rows: rows.len(),
            failed: rows.iter().filter(|r| !r.passed()).count(),
            skipped: rows.iter().filter(|r| r.skipped()).count(),
        };
        Self {
            schema: SCHEMA_VERSION,
            generated_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            config,
            summary,
            rows,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Copy with the run-dependent timing fields zeroed, for comparisons.
    pub fn without_timing(&self) -> Self {
        let mut out = self.clone();
        out.generated_at = 0;
        out.rows.iter_mut().for_each(|r| r.ms = 0);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        for r in &self.rows {
            let failed = r.failed_flags();
            let flags = if failed.is_empty() {
                "ok".to_string()
            } else {
                failed.join("|")
            };
            w.write_record([
                r.spec.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.beta.map_or("skipped".into(), |b| b.to_string()),
                r.pred_lo.to_string(),
                r.pred_hi.to_string(),
                r.theorem.clone(),
                r.witness_size.map_or(String::new(), |k| k.to_string()),
                flags,
                r.ms.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

pub fn open_cases_csv(cases: &[OpenCase]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["spec", "n", "m", "lo", "hi", "theorem", "beta"])
        .expect("in-memory write");
    for c in cases {
        w.write_record([
            c.spec.clone(),
            c.n.to_string(),
            c.m.to_string(),
            c.lo.to_string(),
            c.hi.to_string(),
            c.theorem.clone(),
            c.beta.map_or("skipped".into(), |b| b.to_string()),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn open_cases_json(cases: &[OpenCase]) -> String {
    let body = serde_json::json!({ "schema": SCHEMA_VERSION, "open_cases": cases });
    let mut s = serde_json::to_string_pretty(&body).expect("serializes");
    s.push('\n');
    s
}
