//! The classification engine: every sequence-level rule, per-length tables
//! with provenance traces, the forward closure that tracks sequences with an
//! intrinsically linked representative, and the conflict canary.
//!
//! Statuses are three-valued. "Linkless" and "has an IL representative" are
//! complementary truths; "unknown" only records that no rule settled the
//! sequence. A single sequence receiving both a linkless rule and an IL rule
//! would mean an unsound rule encoding, so that case aborts classification
//! instead of being resolved silently.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::scoreseq::{enumerate_with_cap, EnumerateError, ScoreSequence, DEFAULT_MAX_N};

/// Three-valued classification status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Linkless,
    HasIlRep,
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Linkless => "linkless",
            Status::HasIlRep => "il-representative",
            Status::Unknown => "unknown",
        }
    }

    pub fn parse(text: &str) -> Option<Status> {
        match text {
            "linkless" => Some(Status::Linkless),
            "il-representative" => Some(Status::HasIlRep),
            "unknown" => Some(Status::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rule identifiers carried by provenance traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum RuleId {
    T2_4,
    L3_4,
    P3_5,
    P3_7,
    P3_1,
    P3_2,
    L4_1,
    O4_2,
    L4_3,
    L4_4,
    L4_5,
    Dual,
}

impl RuleId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::T2_4 => "T2.4",
            RuleId::L3_4 => "L3.4",
            RuleId::P3_5 => "P3.5",
            RuleId::P3_7 => "P3.7",
            RuleId::P3_1 => "P3.1",
            RuleId::P3_2 => "P3.2",
            RuleId::L4_1 => "L4.1",
            RuleId::O4_2 => "O4.2",
            RuleId::L4_3 => "L4.3",
            RuleId::L4_4 => "L4.4",
            RuleId::L4_5 => "L4.5",
            RuleId::Dual => "DUAL",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One step of a provenance trace: the rule applied, a witness description,
/// and the sequence the step acted on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: RuleId,
    pub witness: String,
    pub sequence: ScoreSequence,
}

impl TraceStep {
    fn new(rule: RuleId, witness: impl Into<String>, sequence: &ScoreSequence) -> Self {
        TraceStep {
            rule,
            witness: witness.into(),
            sequence: sequence.clone(),
        }
    }
}

/// A classification with its provenance. The trace is non-empty unless the
/// status is `Unknown`; its first step is the rule applied to the classified
/// sequence itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    pub fn headline_rule(&self) -> Option<RuleId> {
        self.trace.first().map(|s| s.rule)
    }
}

/// Classification of every sequence of one length.
#[derive(Debug, Clone)]
pub struct ClassificationTable {
    pub n: usize,
    pub entries: BTreeMap<ScoreSequence, Verdict>,
}

impl ClassificationTable {
    pub fn counts(&self) -> TableCounts {
        let mut counts = TableCounts {
            linkless: 0,
            il: 0,
            unknown: 0,
        };
        for v in self.entries.values() {
            match v.status {
                Status::Linkless => counts.linkless += 1,
                Status::HasIlRep => counts.il += 1,
                Status::Unknown => counts.unknown += 1,
            }
        }
        counts
    }

    pub fn with_status(&self, status: Status) -> Vec<&ScoreSequence> {
        self.entries
            .iter()
            .filter(|(_, v)| v.status == status)
            .map(|(s, _)| s)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCounts {
    pub linkless: usize,
    pub il: usize,
    pub unknown: usize,
}

impl TableCounts {
    pub fn total(&self) -> usize {
        self.linkless + self.il + self.unknown
    }
}

/// Fired when a sequence matches both a linkless rule and an IL rule; this
/// signals an unsound encoding and must abort, never be resolved silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "rule conflict on {sequence}: linkless via {linkless_rule} but IL representative via {il_rule}"
)]
pub struct RuleConflict {
    pub sequence: ScoreSequence,
    pub linkless_rule: String,
    pub il_rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("sequence length {n} exceeds the configured maximum {max}")]
    LengthCap { n: usize, max: usize },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Conflict(#[from] RuleConflict),
}

/// The six base sequences realized by orientations of the layered
/// tripartite construction (rule id P3.1).
const TRIPARTITE_SEQUENCES: [[u32; 8]; 6] = [
    [2, 3, 3, 4, 4, 4, 4, 4],
    [2, 3, 3, 3, 4, 4, 4, 5],
    [3, 3, 3, 3, 4, 4, 4, 4],
    [3, 3, 3, 3, 3, 4, 4, 5],
    [2, 2, 3, 3, 4, 4, 5, 5],
    [2, 2, 3, 4, 4, 4, 4, 5],
];

/// The four base sequences realized by completions of the six-vertex core
/// with two apex vertices (rule id P3.2).
const APEX_SEQUENCES: [[u32; 8]; 4] = [
    [2, 3, 3, 3, 3, 4, 4, 6],
    [1, 3, 3, 3, 3, 4, 5, 6],
    [1, 3, 3, 3, 4, 4, 5, 5],
    [2, 2, 3, 3, 3, 4, 5, 6],
];

/// The seven length-8 sequences settled linkless by the per-sequence
/// contraction analysis (rule id P3.7); their duals qualify too.
const CONTRACTION_ANALYSIS_SEQUENCES: [[u32; 8]; 7] = [
    [1, 2, 3, 3, 4, 5, 5, 5],
    [1, 3, 3, 3, 4, 4, 4, 6],
    [1, 3, 4, 4, 4, 4, 4, 4],
    [1, 2, 3, 3, 4, 4, 5, 6],
    [1, 2, 2, 4, 4, 5, 5, 5],
    [1, 2, 4, 4, 4, 4, 4, 5],
    [1, 3, 3, 3, 3, 5, 5, 5],
];

fn seq(values: &[u32]) -> ScoreSequence {
    ScoreSequence::new(values.to_vec()).expect("built-in sequence tables are valid")
}

/// The 15 length-8 sequences with an intrinsically linked representative:
/// the explicit constructions plus all duals, deduplicated and sorted.
pub fn base_il_sequences() -> Vec<ScoreSequence> {
    base_il_with_origin().into_keys().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ClosureOrigin {
    Base { rule: RuleId },
    DualOf { source: ScoreSequence },
    Extended { parent: ScoreSequence, added: u32 },
}

fn base_il_with_origin() -> BTreeMap<ScoreSequence, ClosureOrigin> {
    let mut out: BTreeMap<ScoreSequence, ClosureOrigin> = BTreeMap::new();
    for (rule, list) in [
        (RuleId::P3_1, &TRIPARTITE_SEQUENCES[..]),
        (RuleId::P3_2, &APEX_SEQUENCES[..]),
    ] {
        for values in list {
            out.entry(seq(values))
                .or_insert(ClosureOrigin::Base { rule });
        }
    }
    let primaries: Vec<ScoreSequence> = out.keys().cloned().collect();
    for s in primaries {
        let d = s.dual();
        out.entry(d).or_insert(ClosureOrigin::DualOf { source: s });
    }
    out
}

/// A direct rule match on a single sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleMatch {
    pub rule: RuleId,
    pub witness: String,
}

/// First matching direct linkless rule for a length-8 sequence: forced-value
/// patterns (L3.4), a 4-subset of out-degrees summing to 8 (P3.5, which
/// subsumes the three listed sparse sequences), or membership in the
/// contraction-analysis list and its duals (P3.7).
pub fn linkless8_rule(s: &ScoreSequence) -> Option<RuleMatch> {
    debug_assert_eq!(s.n(), 8);
    if s.contains_value(0) {
        return Some(RuleMatch {
            rule: RuleId::L3_4,
            witness: "contains 0".into(),
        });
    }
    if s.contains_value(7) {
        return Some(RuleMatch {
            rule: RuleId::L3_4,
            witness: "contains 7".into(),
        });
    }
    for (pattern, text) in [
        (&[1u32, 1][..], "contains 1, 1"),
        (&[6, 6][..], "contains 6, 6"),
        (&[1, 5, 5, 6][..], "contains the values 1, 5, 5, 6"),
        (&[1, 2, 2, 6][..], "contains the values 1, 2, 2, 6"),
    ] {
        if s.contains_submultiset(pattern) {
            return Some(RuleMatch {
                rule: RuleId::L3_4,
                witness: text.into(),
            });
        }
    }
    if let Some(subset) = four_subset_summing_to(s.values(), 8) {
        return Some(RuleMatch {
            rule: RuleId::P3_5,
            witness: format!(
                "out-degrees {} + {} + {} + {} = 8",
                subset[0], subset[1], subset[2], subset[3]
            ),
        });
    }
    for values in &CONTRACTION_ANALYSIS_SEQUENCES {
        let listed = seq(values);
        if *s == listed {
            return Some(RuleMatch {
                rule: RuleId::P3_7,
                witness: "listed sequence".into(),
            });
        }
        if *s == listed.dual() {
            return Some(RuleMatch {
                rule: RuleId::P3_7,
                witness: format!("dual of listed sequence {listed}"),
            });
        }
    }
    None
}

/// Lexicographically-first 4-element sub-multiset with the given sum.
fn four_subset_summing_to(values: &[u32], target: u64) -> Option<[u32; 4]> {
    let n = values.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let sum =
                        values[a] as u64 + values[b] as u64 + values[c] as u64 + values[d] as u64;
                    if sum == target {
                        return Some([values[a], values[b], values[c], values[d]]);
                    }
                }
            }
        }
    }
    None
}

/// A prefix of m sorted out-degrees summing to m(m-1)/2 plays all its wins
/// internally, splitting the tournament; applies when both sides have fewer
/// than 8 vertices. Returns the matched prefix length.
fn isolated_prefix(s: &ScoreSequence) -> Option<usize> {
    let n = s.n();
    let lo = n.saturating_sub(7).max(1);
    let mut sum = 0u64;
    let mut best = None;
    for (idx, &v) in s.values().iter().enumerate() {
        let m = idx + 1;
        if m > 7 {
            break;
        }
        sum += v as u64;
        if m >= lo && sum == (m as u64) * (m as u64 - 1) / 2 && best.is_none() {
            best = Some(m);
        }
    }
    best
}

/// The strengthened split for lengths 9 and 10: a prefix with exactly one
/// outgoing arc (first four summing to 7, or first five summing to 11).
fn near_isolated_prefix(s: &ScoreSequence) -> Option<(usize, u64)> {
    let (m, target) = match s.n() {
        9 => (4usize, 7u64),
        10 => (5usize, 11u64),
        _ => return None,
    };
    let sum: u64 = s.values()[..m].iter().map(|&v| v as u64).sum();
    (sum == target).then_some((m, target))
}

/// Lower bound on the number of linkless sequences of length n obtained by
/// stacking forced vertices onto the k linkless length-8 sequences.
pub fn linkless_lower_bound(n: usize, k: usize) -> usize {
    debug_assert!(n >= 8);
    (n - 7) * (k - 1) + 1
}

/// The classification engine. Holds the configured length cap, the memoized
/// per-sequence verdicts, and the per-length forward-closure sets of
/// IL-representative sequences.
pub struct Classifier {
    max_n: usize,
    memo: HashMap<ScoreSequence, Verdict>,
    il_sets: Vec<Option<BTreeMap<ScoreSequence, ClosureOrigin>>>,
}

impl Classifier {
    pub fn new(max_n: usize) -> Self {
        Classifier {
            max_n,
            memo: HashMap::new(),
            il_sets: vec![None; max_n + 1],
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Classify one sequence, evaluating every applicable rule on the
    /// sequence and its dual, and aborting on any linkless/IL conflict.
    pub fn classify(&mut self, s: &ScoreSequence) -> Result<Verdict, ClassifyError> {
        if s.n() > self.max_n {
            return Err(ClassifyError::LengthCap {
                n: s.n(),
                max: self.max_n,
            });
        }
        if let Some(v) = self.memo.get(s) {
            return Ok(v.clone());
        }
        let verdict = self.classify_uncached(s)?;
        self.memo.insert(s.clone(), verdict.clone());
        Ok(verdict)
    }

    fn classify_uncached(&mut self, s: &ScoreSequence) -> Result<Verdict, ClassifyError> {
        let n = s.n();
        if n <= 7 {
            return Ok(Verdict {
                status: Status::Linkless,
                trace: vec![TraceStep::new(
                    RuleId::T2_4,
                    format!("length {n} <= 7: no such tournament is intrinsically linked"),
                    s,
                )],
            });
        }

        // Candidate traces in reporting-priority order; everything is still
        // evaluated so the conflict canary sees all matches.
        let mut linkless: Vec<Vec<TraceStep>> = Vec::new();
        let mut il: Vec<Vec<TraceStep>> = Vec::new();
        let dual = s.dual();

        let reduction = s.reduce();
        let mut chain_candidate: Option<(Status, Vec<TraceStep>)> = None;
        if let Some(red) = &reduction {
            let sub = self.classify(&red.result)?;
            if sub.status != Status::Unknown {
                let rule = match red.clause.rule_name() {
                    "4.1" => RuleId::L4_1,
                    _ => RuleId::L4_3,
                };
                let mut trace = vec![TraceStep::new(rule, red.clause.describe(), s)];
                trace.extend(sub.trace.clone());
                chain_candidate = Some((sub.status, trace));
            }
        }

        if n == 8 {
            if let Some(m) = linkless8_rule(s) {
                linkless.push(vec![TraceStep::new(m.rule, m.witness, s)]);
            }
            if let Some(m) = linkless8_rule(&dual) {
                linkless.push(vec![
                    TraceStep::new(RuleId::Dual, format!("dual sequence {dual}"), s),
                    TraceStep::new(m.rule, m.witness, &dual),
                ]);
            }
        } else {
            if let Some((status, trace)) = &chain_candidate {
                if *status == Status::Linkless {
                    linkless.push(trace.clone());
                }
            }
            if let Some(m) = isolated_prefix(s) {
                linkless.push(vec![TraceStep::new(
                    RuleId::L4_4,
                    format!(
                        "first {m} values sum to {}: all their wins are internal",
                        m * (m - 1) / 2
                    ),
                    s,
                )]);
            }
            if let Some(m) = isolated_prefix(&dual) {
                linkless.push(vec![
                    TraceStep::new(RuleId::Dual, format!("dual sequence {dual}"), s),
                    TraceStep::new(
                        RuleId::L4_4,
                        format!(
                            "first {m} values sum to {}: all their wins are internal",
                            m * (m - 1) / 2
                        ),
                        &dual,
                    ),
                ]);
            }
            if let Some((m, t)) = near_isolated_prefix(s) {
                linkless.push(vec![TraceStep::new(
                    RuleId::L4_5,
                    format!("first {m} values sum to {t}: a single arc leaves the prefix"),
                    s,
                )]);
            }
            if let Some((m, t)) = near_isolated_prefix(&dual) {
                linkless.push(vec![
                    TraceStep::new(RuleId::Dual, format!("dual sequence {dual}"), s),
                    TraceStep::new(
                        RuleId::L4_5,
                        format!("first {m} values sum to {t}: a single arc leaves the prefix"),
                        &dual,
                    ),
                ]);
            }
        }

        // IL membership through the forward closure (the base set at n = 8).
        if let Some(trace) = self.closure_trace(s) {
            il.push(trace);
        }
        if let Some((status, trace)) = &chain_candidate {
            match status {
                Status::Linkless if n == 8 => linkless.push(trace.clone()),
                Status::HasIlRep => il.push(trace.clone()),
                _ => {}
            }
        }

        match (linkless.first(), il.first()) {
            (Some(l), Some(i)) => Err(RuleConflict {
                sequence: s.clone(),
                linkless_rule: l[0].rule.to_string(),
                il_rule: i[0].rule.to_string(),
            }
            .into()),
            (Some(l), None) => Ok(Verdict {
                status: Status::Linkless,
                trace: l.clone(),
            }),
            (None, Some(i)) => Ok(Verdict {
                status: Status::HasIlRep,
                trace: i.clone(),
            }),
            (None, None) => Ok(Verdict {
                status: Status::Unknown,
                trace: Vec::new(),
            }),
        }
    }

    /// Classify every sequence of length n.
    pub fn classify_all(&mut self, n: usize) -> Result<ClassificationTable, ClassifyError> {
        let seqs = enumerate_with_cap(n, self.max_n)?;
        let mut entries = BTreeMap::new();
        for s in seqs {
            let v = self.classify(&s)?;
            entries.insert(s, v);
        }
        Ok(ClassificationTable { n, entries })
    }

    /// The forward-closure members of length n, sorted: the base set at
    /// length 8, extended one vertex at a time, closed under dual at every
    /// length, and memoized.
    pub fn il_closure(&mut self, n: usize) -> Result<Vec<ScoreSequence>, ClassifyError> {
        if n > self.max_n {
            return Err(ClassifyError::LengthCap { n, max: self.max_n });
        }
        if n < 8 {
            return Ok(Vec::new());
        }
        self.ensure_closure(n);
        Ok(self.il_sets[n].as_ref().unwrap().keys().cloned().collect())
    }

    fn ensure_closure(&mut self, n: usize) {
        for m in 8..=n {
            if self.il_sets[m].is_some() {
                continue;
            }
            let set = if m == 8 {
                base_il_with_origin()
            } else {
                let prev = self.il_sets[m - 1].as_ref().unwrap();
                let parents: Vec<ScoreSequence> = prev.keys().cloned().collect();
                let mut set: BTreeMap<ScoreSequence, ClosureOrigin> = BTreeMap::new();
                for parent in &parents {
                    for d in 0..=(m as u32 - 1) {
                        for child in parent.extend(d).expect("degree within range") {
                            set.entry(child).or_insert_with(|| ClosureOrigin::Extended {
                                parent: parent.clone(),
                                added: d,
                            });
                        }
                    }
                }
                // Explicit dual closure; the extension step already commutes
                // with duality, so this normally adds nothing.
                let members: Vec<ScoreSequence> = set.keys().cloned().collect();
                for s in members {
                    let d = s.dual();
                    set.entry(d).or_insert(ClosureOrigin::DualOf { source: s });
                }
                set
            };
            self.il_sets[m] = Some(set);
        }
    }

    fn closure_trace(&mut self, s: &ScoreSequence) -> Option<Vec<TraceStep>> {
        let n = s.n();
        if n < 8 || n > self.max_n {
            return None;
        }
        self.ensure_closure(n);
        self.il_sets[n].as_ref().unwrap().get(s)?;
        let mut steps = Vec::new();
        let mut cur = s.clone();
        loop {
            let origin = self.il_sets[cur.n()].as_ref().unwrap()[&cur].clone();
            match origin {
                ClosureOrigin::Base { rule } => {
                    steps.push(TraceStep::new(rule, "explicit construction", &cur));
                    break;
                }
                ClosureOrigin::DualOf { source } => {
                    steps.push(TraceStep::new(
                        RuleId::Dual,
                        format!("dual of {source}"),
                        &cur,
                    ));
                    cur = source;
                }
                ClosureOrigin::Extended { parent, added } => {
                    steps.push(TraceStep::new(
                        RuleId::O4_2,
                        format!("extends {parent} by a vertex of out-degree {added}"),
                        &cur,
                    ));
                    cur = parent;
                }
            }
        }
        Some(steps)
    }
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier::new(DEFAULT_MAX_N)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scoreseq::enumerate;

    fn sv(values: &[u32]) -> ScoreSequence {
        ScoreSequence::new(values.to_vec()).unwrap()
    }

    #[test]
    fn base_il_is_the_fifteen_table_rows() {
        let base = base_il_sequences();
        assert_eq!(base.len(), 15);
        assert!(base.contains(&sv(&[3, 3, 3, 3, 4, 4, 4, 4])));
        assert!(base.contains(&sv(&[1, 2, 3, 4, 4, 4, 4, 6])));
        let expected: Vec<ScoreSequence> = [
            [1u32, 2, 3, 4, 4, 4, 4, 6],
            [1, 2, 3, 4, 4, 4, 5, 5],
            [1, 3, 3, 3, 3, 4, 5, 6],
            [1, 3, 3, 3, 4, 4, 5, 5],
            [1, 3, 3, 4, 4, 4, 4, 5],
            [2, 2, 3, 3, 3, 4, 5, 6],
            [2, 2, 3, 3, 4, 4, 4, 6],
            [2, 2, 3, 3, 4, 4, 5, 5],
            [2, 2, 3, 4, 4, 4, 4, 5],
            [2, 3, 3, 3, 3, 4, 4, 6],
            [2, 3, 3, 3, 3, 4, 5, 5],
            [2, 3, 3, 3, 4, 4, 4, 5],
            [2, 3, 3, 4, 4, 4, 4, 4],
            [3, 3, 3, 3, 3, 4, 4, 5],
            [3, 3, 3, 3, 4, 4, 4, 4],
        ]
        .iter()
        .map(|v| sv(v))
        .collect();
        assert_eq!(base, expected);
    }

    #[test]
    fn linkless8_examples() {
        let m = linkless8_rule(&sv(&[0, 1, 2, 3, 4, 5, 6, 7])).unwrap();
        assert_eq!(m.rule, RuleId::L3_4);

        let m = linkless8_rule(&sv(&[2, 2, 2, 2, 4, 5, 5, 6])).unwrap();
        assert_eq!(m.rule, RuleId::P3_5);

        assert!(linkless8_rule(&sv(&[2, 2, 2, 3, 4, 5, 5, 5])).is_none());
    }

    #[test]
    fn classify_base_il() {
        let mut c = Classifier::default();
        let v = c.classify(&sv(&[3, 3, 3, 3, 4, 4, 4, 4])).unwrap();
        assert_eq!(v.status, Status::HasIlRep);
        assert_eq!(v.headline_rule(), Some(RuleId::P3_1));
    }

    #[test]
    fn classify_unknown() {
        let mut c = Classifier::default();
        let v = c.classify(&sv(&[2, 2, 2, 3, 4, 5, 5, 5])).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert!(v.trace.is_empty());
    }

    #[test]
    fn classify_transitive_9_via_chain() {
        let mut c = Classifier::default();
        let v = c.classify(&sv(&[0, 1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(v.status, Status::Linkless);
        assert_eq!(v.headline_rule(), Some(RuleId::L4_1));
        let last = v.trace.last().unwrap();
        assert!(matches!(last.rule, RuleId::T2_4 | RuleId::L3_4));
    }

    #[test]
    fn classify_short_lengths() {
        let mut c = Classifier::default();
        for n in 1..=7 {
            for s in enumerate(n).unwrap() {
                let v = c.classify(&s).unwrap();
                assert_eq!(v.status, Status::Linkless);
                assert_eq!(v.headline_rule(), Some(RuleId::T2_4));
            }
        }
    }

    #[test]
    fn classify_respects_cap() {
        let mut c = Classifier::new(8);
        assert!(matches!(
            c.classify(&sv(&[0, 1, 2, 3, 4, 5, 6, 7, 8])),
            Err(ClassifyError::LengthCap { n: 9, max: 8 })
        ));
    }

    #[test]
    fn n8_table_counts() {
        let mut c = Classifier::default();
        let table = c.classify_all(8).unwrap();
        let counts = table.counts();
        assert_eq!(counts.linkless, 147);
        assert_eq!(counts.il, 15);
        assert_eq!(counts.unknown, 5);
    }

    #[test]
    fn n8_unknowns_are_the_five_open_sequences() {
        let mut c = Classifier::default();
        let table = c.classify_all(8).unwrap();
        let unknown: Vec<&ScoreSequence> = table.with_status(Status::Unknown);
        let expected = [
            sv(&[2, 2, 2, 3, 4, 5, 5, 5]),
            sv(&[2, 2, 2, 4, 4, 4, 5, 5]),
            sv(&[2, 2, 3, 3, 3, 5, 5, 5]),
            sv(&[2, 2, 4, 4, 4, 4, 4, 4]),
            sv(&[3, 3, 3, 3, 3, 3, 5, 5]),
        ];
        assert_eq!(unknown.len(), 5);
        for (got, want) in unknown.iter().zip(expected.iter()) {
            assert_eq!(*got, want);
        }
    }

    #[test]
    fn n8_il_rows_match_base() {
        let mut c = Classifier::default();
        let table = c.classify_all(8).unwrap();
        let il: Vec<ScoreSequence> = table
            .with_status(Status::HasIlRep)
            .into_iter()
            .cloned()
            .collect();
        assert_eq!(il, base_il_sequences());
    }

    #[test]
    fn closure_level_9() {
        let mut c = Classifier::default();
        let level9 = c.il_closure(9).unwrap();
        assert_eq!(level9.len(), 131);
        assert!(level9.contains(&sv(&[3, 3, 3, 3, 4, 4, 4, 5, 7])));
        for s in &level9 {
            assert!(level9.contains(&s.dual()));
        }
    }

    #[test]
    fn closure_sizes_and_equality_with_classified_il() {
        let mut c = Classifier::default();
        for (n, size) in [(9usize, 131usize), (10, 660), (11, 2719)] {
            let closure = c.il_closure(n).unwrap();
            assert_eq!(closure.len(), size, "closure size at n = {n}");
            let table = c.classify_all(n).unwrap();
            let classified: Vec<ScoreSequence> = table
                .with_status(Status::HasIlRep)
                .into_iter()
                .cloned()
                .collect();
            assert_eq!(closure, classified, "closure differs from table at n = {n}");
        }
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(linkless_lower_bound(9, 147), 293);
        assert_eq!(linkless_lower_bound(8, 147), 147);
    }

    #[test]
    fn dual_status_invariance_n9() {
        let mut c = Classifier::default();
        for s in enumerate(9).unwrap() {
            let a = c.classify(&s).unwrap().status;
            let b = c.classify(&s.dual()).unwrap().status;
            assert_eq!(a, b, "status differs for {s} and its dual");
        }
    }

    #[test]
    fn reduce_status_invariance_n9() {
        let mut c = Classifier::default();
        for s in enumerate(9).unwrap() {
            if let Some(red) = s.reduce() {
                let a = c.classify(&s).unwrap().status;
                let b = c.classify(&red.result).unwrap().status;
                assert_eq!(a, b, "status changes across reduce for {s}");
            }
        }
    }
}
