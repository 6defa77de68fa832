//! Line-oriented and JSON renderings of command results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bench::BenchRow;
use crate::extremal::{Experiment, ExperimentSummary, TrialReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Summary of one CLI command. Every entry of `checks` was evaluated on this
/// run's output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub n: usize,
    pub m: usize,
    pub result_size: usize,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub properties: BTreeMap<String, String>,
    pub wall_time_ns: u128,
}

impl RunReport {
    pub fn new(command: &str, n: usize, m: usize) -> Self {
        RunReport {
            command: command.to_string(),
            n,
            m,
            result_size: 0,
            checks: Vec::new(),
            properties: BTreeMap::new(),
            wall_time_ns: 0,
        }
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
        });
    }

    pub fn property(&mut self, name: &str, value: impl ToString) {
        self.properties.insert(name.to_string(), value.to_string());
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `command=.. n=.. m=.. result_size=.. [key=value ..] [check.name=pass|fail ..] wall_time_ns=..`
    pub fn to_record(&self) -> String {
        let mut line = format!(
            "command={} n={} m={} result_size={}",
            self.command, self.n, self.m, self.result_size
        );
        for (k, v) in &self.properties {
            let _ = write!(line, " {k}={v}");
        }
        for c in &self.checks {
            let _ = write!(
                line,
                " check.{}={}",
                c.name,
                if c.passed { "pass" } else { "fail" }
            );
        }
        let _ = write!(line, " wall_time_ns={}", self.wall_time_ns);
        line
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn trial_record(t: &TrialReport) -> String {
    format!(
        "seed={} n={} m={} max_dicut={} bound_m4={:.6} bound_alon={:.6} balanced_fraction={:.6}",
        t.seed, t.n, t.m, t.max_dicut, t.bound_m4, t.bound_alon, t.balanced_fraction
    )
}

pub fn summary_record(s: &ExperimentSummary) -> String {
    format!(
        "summary trials={} n={} m={} k={} delta={:.6} cprime={:.6} seed={} min_max_dicut={} \
         max_max_dicut={} mean_max_dicut={:.6} bound_m4={:.6} bound_alon={:.6} all_within_bounds={} \
         chernoff_prediction={:.6e} observed_unbalanced_fraction={:.6}",
        s.trials,
        s.n,
        s.m,
        s.k,
        s.delta,
        s.cprime,
        s.seed,
        s.min_max_dicut,
        s.max_max_dicut,
        s.mean_max_dicut,
        s.bound_m4,
        s.bound_alon,
        s.all_within_bounds,
        s.chernoff_prediction,
        s.observed_unbalanced_fraction
    )
}

pub fn experiment_text(e: &Experiment) -> String {
    let mut out = String::new();
    for t in &e.reports {
        out.push_str(&trial_record(t));
        out.push('\n');
    }
    out.push_str(&summary_record(&e.summary));
    out.push('\n');
    out
}

pub fn experiment_json(e: &Experiment) -> String {
    serde_json::to_string_pretty(e).expect("experiment serializes") + "\n"
}

fn ratio(r: Option<f64>) -> String {
    r.map_or_else(|| "-".to_string(), |x| format!("{x:.3}"))
}

pub fn bench_text(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(
            out,
            "n={} m={} v1_median_ns={} v2_median_ns={} speedup={:.3} v1_doubling={} v2_doubling={}",
            r.n,
            r.m,
            r.v1_median_ns,
            r.v2_median_ns,
            r.speedup(),
            ratio(r.v1_doubling),
            ratio(r.v2_doubling)
        );
    }
    out
}

pub fn bench_json(rows: &[BenchRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}
