//! The acceptance checks, runnable from the CLI (`tournalink verify`) and
//! from the integration test suite. Each criterion reports pass/fail, a
//! detail line, and its elapsed time against a fixed budget.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cg::{certificate_search, certify_tournament8, cg_links, ls_set};
use crate::constructions::{
    complete_tripartite, double_contraction_witness, oracle_suite, CycleOrientation,
    TripartiteChoice,
};
use crate::digraph::{Digraph, Tournament};
use crate::rules::{base_il_sequences, linkless_lower_bound, Classifier, Status};
use crate::scoreseq::{enumerate, ScoreSequence};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {}: {} ({:.2}s of {:.0}s) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs_f64(),
            self.detail
        )
    }
}

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    failures: Vec<String>,
    notes: Vec<String>,
    start: Instant,
}

impl Criterion {
    fn new(id: usize, name: &'static str, budget_secs: u64) -> Self {
        Criterion {
            id,
            name,
            budget: Duration::from_secs(budget_secs),
            failures: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, message: impl Into<String>) {
        if !ok {
            self.failures.push(message.into());
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn note(&mut self, message: impl Into<String>) {
        self.notes.push(message.into());
    }

    fn finish(mut self) -> CriterionResult {
        let elapsed = self.start.elapsed();
        if elapsed > self.budget {
            self.failures.push(format!(
                "over time budget: {:.2}s > {:.0}s",
                elapsed.as_secs_f64(),
                self.budget.as_secs_f64()
            ));
        }
        let detail = if self.failures.is_empty() {
            self.notes.join("; ")
        } else {
            self.failures.join("; ")
        };
        CriterionResult {
            id: self.id,
            name: self.name,
            passed: self.failures.is_empty(),
            detail,
            elapsed,
            budget: self.budget,
        }
    }
}

fn sv(values: &[u32]) -> ScoreSequence {
    ScoreSequence::new(values.to_vec()).expect("fixture sequences are valid")
}

/// Enumeration sizes for n = 8..=11.
pub fn criterion1_enumeration_counts() -> CriterionResult {
    let mut c = Criterion::new(1, "enumeration counts", 5);
    let expected = [(8usize, 167usize), (9, 490), (10, 1486), (11, 4639)];
    for (n, want) in expected {
        match enumerate(n) {
            Ok(seqs) => c.check_eq(seqs.len(), want, &format!("count at n = {n}")),
            Err(e) => c.check(false, format!("enumerate({n}) failed: {e}")),
        }
    }
    c.note("167/490/1486/4639");
    c.finish()
}

/// Linkless length-8 rows used as spot fixtures, spanning every rule family.
const LINKLESS8_SPOT_ROWS: [[u32; 8]; 20] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 4, 4, 4, 4, 4, 4, 4],
    [1, 1, 1, 3, 4, 5, 6, 7],
    [1, 1, 4, 4, 4, 4, 5, 5],
    [2, 2, 3, 3, 3, 3, 6, 6],
    [3, 3, 3, 3, 3, 3, 3, 7],
    [1, 2, 2, 3, 5, 5, 5, 5],
    [2, 2, 2, 2, 4, 5, 5, 6],
    [2, 2, 2, 2, 5, 5, 5, 5],
    [1, 2, 3, 3, 4, 4, 5, 6],
    [1, 2, 3, 3, 4, 5, 5, 5],
    [1, 2, 4, 4, 4, 4, 4, 5],
    [1, 3, 3, 3, 3, 5, 5, 5],
    [1, 3, 3, 3, 4, 4, 4, 6],
    [1, 3, 4, 4, 4, 4, 4, 4],
    [2, 2, 2, 3, 3, 5, 5, 6],
    [2, 2, 2, 3, 4, 4, 5, 6],
    [2, 2, 2, 4, 4, 4, 4, 6],
    [2, 3, 3, 3, 3, 3, 5, 6],
    [3, 3, 3, 3, 3, 3, 4, 6],
];

/// The five length-8 sequences the rule set leaves open.
pub const UNKNOWN8_SEQUENCES: [[u32; 8]; 5] = [
    [2, 2, 2, 3, 4, 5, 5, 5],
    [2, 2, 2, 4, 4, 4, 5, 5],
    [2, 2, 3, 3, 3, 5, 5, 5],
    [2, 2, 4, 4, 4, 4, 4, 4],
    [3, 3, 3, 3, 3, 3, 5, 5],
];

/// The n = 8 table: counts, the exact unknown set, the exact IL set, and
/// spot linkless rows.
pub fn criterion2_table8(classifier: &mut Classifier) -> CriterionResult {
    let mut c = Criterion::new(2, "n=8 table", 1);
    match classifier.classify_all(8) {
        Ok(table) => {
            let counts = table.counts();
            c.check_eq(counts.linkless, 147, "linkless count");
            c.check_eq(counts.il, 15, "IL count");
            c.check_eq(counts.unknown, 5, "unknown count");

            let unknown: Vec<ScoreSequence> = table
                .with_status(Status::Unknown)
                .into_iter()
                .cloned()
                .collect();
            let expected_unknown: Vec<ScoreSequence> =
                UNKNOWN8_SEQUENCES.iter().map(|v| sv(v)).collect();
            c.check_eq(unknown, expected_unknown, "unknown set");

            let il: Vec<ScoreSequence> = table
                .with_status(Status::HasIlRep)
                .into_iter()
                .cloned()
                .collect();
            c.check_eq(il, base_il_sequences(), "IL set");

            for row in &LINKLESS8_SPOT_ROWS {
                let s = sv(row);
                let status = table.entries[&s].status;
                c.check(
                    status == Status::Linkless,
                    format!("spot row {s} classified {status}"),
                );
            }
            c.note(format!(
                "147/15/5 with {} spot rows",
                LINKLESS8_SPOT_ROWS.len()
            ));
        }
        Err(e) => c.check(false, format!("classify_all(8) failed: {e}")),
    }
    c.finish()
}

/// Tables for n = 9, 10, 11: exact IL and unknown counts.
pub fn criterion3_larger_tables(classifier: &mut Classifier) -> CriterionResult {
    let mut c = Criterion::new(3, "n=9..11 tables", 60);
    let expected = [(9usize, 131usize, 37usize), (10, 660, 150), (11, 2719, 512)];
    for (n, il, unknown) in expected {
        match classifier.classify_all(n) {
            Ok(table) => {
                let counts = table.counts();
                c.check_eq(counts.il, il, &format!("IL count at n = {n}"));
                c.check_eq(
                    counts.unknown,
                    unknown,
                    &format!("unknown count at n = {n}"),
                );
            }
            Err(e) => c.check(false, format!("classify_all({n}) failed: {e}")),
        }
    }
    c.note("(131,37)/(660,150)/(2719,512)");
    c.finish()
}

/// The link table and its hitting set.
pub fn criterion4_cg_data() -> CriterionResult {
    let mut c = Criterion::new(4, "K7 link data", 1);
    let links = cg_links();
    c.check_eq(links.len(), 21, "link count");
    for link in links.iter() {
        c.check(
            link.first.disjoint(&link.second),
            format!("components of {link} share a vertex"),
        );
    }
    for link in links.iter() {
        c.check(
            ls_set().contains(&link.first) || ls_set().contains(&link.second),
            format!("{link} has no component in LS"),
        );
    }
    c.note("21 links, LS hits all");
    c.finish()
}

fn random_tournament6(rng: &mut ChaCha8Rng) -> Tournament {
    let mut arcs = Vec::with_capacity(15);
    for i in 0..6 {
        for j in i + 1..6 {
            if rng.random() {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
        }
    }
    Tournament::from_arcs(6, &arcs).expect("one arc per pair")
}

/// Extend a 6-tournament by a seventh vertex with arbitrary arcs (absent,
/// single in either direction, or a symmetric pair).
fn attach_seventh_vertex(t: &Tournament, rng: &mut ChaCha8Rng) -> Digraph {
    let mut arcs = t.digraph().arcs();
    for v in 0..6 {
        match rng.random_range(0..4) {
            0 => arcs.push((6, v)),
            1 => arcs.push((v, 6)),
            2 => {
                arcs.push((6, v));
                arcs.push((v, 6));
            }
            _ => {}
        }
    }
    Digraph::from_arcs(7, &arcs).expect("clean arc list")
}

/// The certificate engine finds a labeling for every qualifying 7-vertex
/// digraph: 100 random instances per clause, every certificate re-verified.
pub fn criterion5_certificate_engine() -> CriterionResult {
    type Clause = (&'static str, fn(&ScoreSequence) -> bool);
    let mut c = Criterion::new(5, "certificate engine", 30);
    let clauses: [Clause; 6] = [
        ("contains 0", |s| s.contains_value(0)),
        ("contains 5", |s| s.contains_value(5)),
        ("starts 1,1", |s| s.values()[0] == 1 && s.values()[1] == 1),
        ("ends 4,4", |s| s.values()[4] == 4 && s.values()[5] == 4),
        ("equals (2,2,2,3,3,3)", |s| s.values() == [2, 2, 2, 3, 3, 3]),
        ("equals (1,2,2,3,3,4)", |s| s.values() == [1, 2, 2, 3, 3, 4]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut total = 0usize;
    for (name, matches) in clauses {
        let mut done = 0;
        while done < 100 {
            let t = random_tournament6(&mut rng);
            if !matches(&t.score_sequence()) {
                continue;
            }
            let g = attach_seventh_vertex(&t, &mut rng);
            match certificate_search(&g) {
                Some(cert) => {
                    if !cert.verify(&g) {
                        c.check(false, format!("certificate fails re-verification ({name})"));
                    }
                }
                None => c.check(
                    false,
                    format!(
                        "no certificate for clause {name}, tournament {:?}",
                        t.digraph().arcs()
                    ),
                ),
            }
            done += 1;
            total += 1;
        }
    }
    c.note(format!("{total} searches, all certified and re-verified"));
    c.finish()
}

/// The tripartite completions hit their six claimed score sequences and the
/// 18 core triangles through C are consistent.
pub fn criterion6_constructions() -> CriterionResult {
    use CycleOrientation::*;
    let mut c = Criterion::new(6, "constructions", 1);
    let cases: [(TripartiteChoice, [u32; 8]); 6] = [
        (
            TripartiteChoice::Standard {
                a_cycle: Consistent,
                b_cycle: Consistent,
            },
            [3, 3, 3, 3, 4, 4, 4, 4],
        ),
        (
            TripartiteChoice::Standard {
                a_cycle: Consistent,
                b_cycle: Inconsistent,
            },
            [2, 3, 3, 4, 4, 4, 4, 4],
        ),
        (
            TripartiteChoice::Standard {
                a_cycle: Inconsistent,
                b_cycle: Consistent,
            },
            [3, 3, 3, 3, 3, 4, 4, 5],
        ),
        (
            TripartiteChoice::Standard {
                a_cycle: Inconsistent,
                b_cycle: Inconsistent,
            },
            [2, 3, 3, 3, 4, 4, 4, 5],
        ),
        (
            TripartiteChoice::B2Reversed {
                a_cycle: Consistent,
            },
            [2, 2, 3, 4, 4, 4, 4, 5],
        ),
        (
            TripartiteChoice::B2Reversed {
                a_cycle: Inconsistent,
            },
            [2, 2, 3, 3, 4, 4, 5, 5],
        ),
    ];
    for (choice, expected) in cases {
        let got = complete_tripartite(choice).tournament.score_sequence();
        c.check_eq(got, sv(&expected), &format!("scores for {choice}"));
    }
    let core = crate::constructions::build_tripartite_core();
    for cv in [6, 7] {
        for a in [0, 1, 2] {
            for b in [3, 4, 5] {
                c.check(
                    core.has_arc(cv, a) && core.has_arc(a, b) && core.has_arc(b, cv),
                    format!("triangle {cv}-{a}-{b} not consistent"),
                );
            }
        }
    }
    c.note("six sequences, 18 triangles");
    c.finish()
}

/// Both halves of the two-sided phenomenon on (1,3,3,3,3,4,5,6): the
/// sequence classifies as having an IL representative, while a constrained
/// realization is certified not linked.
pub fn criterion7_two_sided_sequence(classifier: &mut Classifier) -> CriterionResult {
    let mut c = Criterion::new(7, "two-sided sequence", 5);
    let s = sv(&[1, 3, 3, 3, 3, 4, 5, 6]);
    match double_contraction_witness(&s) {
        Ok(Some(t)) => {
            c.check_eq(t.score_sequence(), s.clone(), "witness scores");
            c.check(
                certify_tournament8(&t).is_some(),
                "witness not certified as unlinked",
            );
        }
        Ok(None) => c.check(false, "no witness realization found"),
        Err(e) => c.check(false, format!("witness construction failed: {e}")),
    }
    match classifier.classify(&s) {
        Ok(v) => c.check_eq(v.status, Status::HasIlRep, "classification"),
        Err(e) => c.check(false, format!("classify failed: {e}")),
    }
    c.note("IL-representative sequence with a certified-unlinked realization");
    c.finish()
}

/// Property sweeps: dual involution and status invariance through n = 10,
/// reduce invariance through n = 10, realize round-trips at 8 and 9, the
/// conflict canary through n = 11, the exhaustive transitive-triangle check,
/// and acyclicity of transitive tournaments.
pub fn criterion8_property_suites(classifier: &mut Classifier) -> CriterionResult {
    let mut c = Criterion::new(8, "property suites", 120);

    for n in 1..=10usize {
        let seqs = enumerate(n).expect("within cap");
        for s in &seqs {
            if s.dual().dual() != *s {
                c.check(false, format!("dual not an involution on {s}"));
            }
        }
        if n >= 8 {
            for s in &seqs {
                let a = classifier.classify(s);
                let b = classifier.classify(&s.dual());
                match (a, b) {
                    (Ok(va), Ok(vb)) => c.check(
                        va.status == vb.status,
                        format!("dual status mismatch on {s}"),
                    ),
                    _ => c.check(false, format!("classification error near {s}")),
                }
            }
            for s in &seqs {
                if let Some(red) = s.reduce() {
                    let a = classifier.classify(s);
                    let b = classifier.classify(&red.result);
                    match (a, b) {
                        (Ok(va), Ok(vb)) => c.check(
                            va.status == vb.status,
                            format!("reduce changes status of {s}"),
                        ),
                        _ => c.check(false, format!("classification error near {s}")),
                    }
                }
            }
        }
    }

    for n in [8usize, 9] {
        for s in enumerate(n).expect("within cap") {
            let t = Tournament::realize(&s);
            if t.score_sequence() != s {
                c.check(false, format!("realize round trip fails on {s}"));
            }
        }
    }

    // Conflict canary: every classification through n = 11 must succeed.
    for n in 8..=11usize {
        if let Err(e) = classifier.classify_all(n) {
            c.check(false, format!("conflict canary fired at n = {n}: {e}"));
        }
    }

    for check in oracle_suite() {
        c.check(check.passed, format!("oracle check failed: {check}"));
    }

    c.note("dual/reduce invariance, realize round-trips, canary, exhaustive oracles");
    c.finish()
}

/// The stacking lower bound sits below the computed linkless counts.
pub fn criterion9_lower_bound(classifier: &mut Classifier) -> CriterionResult {
    let mut c = Criterion::new(9, "linkless lower bound", 5);
    let k = 147usize;
    let expected_bounds = [(9usize, 293usize), (10, 439), (11, 585)];
    for (n, want) in expected_bounds {
        let bound = linkless_lower_bound(n, k);
        c.check_eq(bound, want, &format!("bound at n = {n}"));
        match classifier.classify_all(n) {
            Ok(table) => {
                let linkless = table.counts().linkless;
                c.check(
                    bound <= linkless,
                    format!("bound {bound} exceeds linkless count {linkless} at n = {n}"),
                );
            }
            Err(e) => c.check(false, format!("classify_all({n}) failed: {e}")),
        }
    }
    c.note("293<=322, 439<=676, 585<=1408");
    c.finish()
}

/// Run all acceptance criteria in order, sharing one classifier.
pub fn run_all() -> Vec<CriterionResult> {
    let mut classifier = Classifier::default();
    vec![
        criterion1_enumeration_counts(),
        criterion2_table8(&mut classifier),
        criterion3_larger_tables(&mut classifier),
        criterion4_cg_data(),
        criterion5_certificate_engine(),
        criterion6_constructions(),
        criterion7_two_sided_sequence(&mut classifier),
        criterion8_property_suites(&mut classifier),
        criterion9_lower_bound(&mut classifier),
    ]
}
