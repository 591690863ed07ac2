//! Serializable record types shared by the CLI output formats and the
//! on-disk classification cache.

use serde::{Deserialize, Serialize};

use crate::rules::{RuleId, Status, TraceStep, Verdict};
use crate::scoreseq::ScoreSequence;

/// One trace step in wire form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepRecord {
    pub rule: String,
    pub witness: String,
    pub sequence: Vec<u32>,
}

impl TraceStepRecord {
    fn from_step(step: &TraceStep) -> Self {
        TraceStepRecord {
            rule: step.rule.to_string(),
            witness: step.witness.clone(),
            sequence: step.sequence.values().to_vec(),
        }
    }
}

/// One classified sequence in wire form. Round-trips through both the CSV
/// and JSON formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub sequence: Vec<u32>,
    pub status: String,
    pub trace: Vec<TraceStepRecord>,
}

impl OutputRecord {
    pub fn new(sequence: &ScoreSequence, verdict: &Verdict) -> Self {
        OutputRecord {
            sequence: sequence.values().to_vec(),
            status: verdict.status.as_str().to_string(),
            trace: verdict
                .trace
                .iter()
                .map(TraceStepRecord::from_step)
                .collect(),
        }
    }

    pub fn status(&self) -> Option<Status> {
        Status::parse(&self.status)
    }

    /// The rule shown in single-line output: the first trace step's id.
    pub fn headline_rule(&self) -> &str {
        self.trace.first().map(|s| s.rule.as_str()).unwrap_or("")
    }

    pub fn sequence_text(&self) -> String {
        let parts: Vec<String> = self.sequence.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(", "))
    }

    pub fn csv_row(&self) -> String {
        format!(
            "\"{}\",{},{}",
            self.sequence_text(),
            self.status,
            self.headline_rule()
        )
    }
}

pub const CSV_HEADER: &str = "sequence,status,rule";

/// Human-readable trace lines, one per step.
pub fn trace_lines(verdict: &Verdict) -> Vec<String> {
    verdict
        .trace
        .iter()
        .map(|step| format!("{}: {} at {}", step.rule, step.witness, step.sequence))
        .collect()
}

/// The single-line summary for a classification, e.g.
/// `il-representative (P3.1)`.
pub fn headline(verdict: &Verdict) -> String {
    match verdict.headline_rule() {
        Some(rule) => format!("{} ({})", verdict.status, rule),
        None => verdict.status.to_string(),
    }
}

/// Parse one CSV data row produced by `csv_row` (quoted sequence field).
pub fn parse_csv_row(line: &str) -> Option<(Vec<u32>, String, String)> {
    let rest = line.strip_prefix('"')?;
    let end = rest.find('"')?;
    let seq_text = &rest[..end];
    let mut fields = rest[end + 1..].strip_prefix(',')?.splitn(2, ',');
    let status = fields.next()?.to_string();
    let rule = fields.next().unwrap_or("").to_string();
    let values: Result<Vec<u32>, _> = seq_text
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect();
    Some((values.ok()?, status, rule))
}

/// Re-export of [`RuleId`] display names for documentation purposes.
pub fn rule_ids() -> Vec<&'static str> {
    [
        RuleId::T2_4,
        RuleId::L3_4,
        RuleId::P3_5,
        RuleId::P3_7,
        RuleId::P3_1,
        RuleId::P3_2,
        RuleId::L4_1,
        RuleId::O4_2,
        RuleId::L4_3,
        RuleId::L4_4,
        RuleId::L4_5,
        RuleId::Dual,
    ]
    .iter()
    .map(|r| r.as_str())
    .collect()
}
