//! Score-sequence arithmetic: Landau validation, enumeration, duality,
//! reductions, extensions, and fragment matching.
//!
//! A score sequence is the sorted list of out-degrees of a tournament.
//! Landau's condition characterizes them: every length-k prefix sums to at
//! least k(k-1)/2, with equality at k = n. The number of score sequences
//! grows roughly like 4^n / n^(5/2), so enumeration past the default cap
//! gets large quickly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Default cap on sequence length for enumeration and classification.
pub const DEFAULT_MAX_N: usize = 12;

/// Why a value vector fails to be a tournament score sequence.
///
/// `landau_check` reports the first failed condition in the order: unsorted,
/// bad total, prefix deficit, value range. For sorted input with the correct
/// total and valid prefixes the value-range condition is implied, so
/// `ValueRange` is reachable only by constructing it directly; it is kept so
/// the contract names every condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LandauViolation {
    #[error("empty sequence")]
    Empty,
    #[error("unsorted: value {value} at position {index} exceeds its successor")]
    Unsorted { index: usize, value: u32 },
    #[error("total {total} != {expected}")]
    BadTotal { total: u64, expected: u64 },
    #[error("prefix deficit: first {prefix_len} values sum to {sum}, need at least {required}")]
    PrefixDeficit {
        prefix_len: usize,
        sum: u64,
        required: u64,
    },
    #[error("value {value} at position {index} exceeds the maximum {max}")]
    ValueRange { index: usize, value: u32, max: u32 },
}

/// Check an arbitrary value vector against the score-sequence invariants.
///
/// Invalid input is a normal result, not an error: the returned violation
/// names the first failed condition.
pub fn landau_check(values: &[u32]) -> Result<(), LandauViolation> {
    let n = values.len();
    if n == 0 {
        return Err(LandauViolation::Empty);
    }
    for i in 0..n - 1 {
        if values[i] > values[i + 1] {
            return Err(LandauViolation::Unsorted {
                index: i,
                value: values[i],
            });
        }
    }
    let expected = (n as u64) * (n as u64 - 1) / 2;
    let total: u64 = values.iter().map(|&v| v as u64).sum();
    if total != expected {
        return Err(LandauViolation::BadTotal { total, expected });
    }
    let mut sum = 0u64;
    for (k, &v) in values.iter().enumerate() {
        sum += v as u64;
        let required = (k as u64 + 1) * (k as u64) / 2;
        if sum < required {
            return Err(LandauViolation::PrefixDeficit {
                prefix_len: k + 1,
                sum,
                required,
            });
        }
    }
    let max = n as u32 - 1;
    for (i, &v) in values.iter().enumerate() {
        if v > max {
            return Err(LandauViolation::ValueRange {
                index: i,
                value: v,
                max,
            });
        }
    }
    Ok(())
}

/// Errors from parsing sequence text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSequenceError {
    #[error("empty sequence text")]
    Empty,
    #[error("invalid integer {text:?}")]
    BadInteger { text: String },
    #[error("values are not in non-decreasing order (request normalization to sort them)")]
    Unsorted,
    #[error(transparent)]
    Invalid(#[from] LandauViolation),
}

/// Text format: comma-separated integers, optional surrounding parentheses
/// and whitespace, e.g. `"(1, 2, 2, 3, 5, 5, 5, 5)"`.
fn parse_values(text: &str) -> Result<Vec<u32>, ParseSequenceError> {
    let mut t = text.trim();
    if t.starts_with('(') && t.ends_with(')') {
        t = t[1..t.len() - 1].trim();
    }
    if t.is_empty() {
        return Err(ParseSequenceError::Empty);
    }
    t.split(',')
        .map(|piece| {
            let piece = piece.trim();
            piece
                .parse::<u32>()
                .map_err(|_| ParseSequenceError::BadInteger {
                    text: piece.to_string(),
                })
        })
        .collect()
}

/// A tournament score sequence: non-decreasing out-degrees satisfying
/// Landau's condition. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScoreSequence {
    values: Vec<u32>,
}

impl ScoreSequence {
    /// Validate and wrap a value vector.
    pub fn new(values: Vec<u32>) -> Result<Self, LandauViolation> {
        landau_check(&values)?;
        Ok(ScoreSequence { values })
    }

    /// Parse sequence text. Unsorted input is rejected unless `normalize`
    /// is set, in which case the values are sorted first.
    pub fn parse(text: &str, normalize: bool) -> Result<Self, ParseSequenceError> {
        let mut values = parse_values(text)?;
        if !values.windows(2).all(|w| w[0] <= w[1]) {
            if normalize {
                values.sort_unstable();
            } else {
                return Err(ParseSequenceError::Unsorted);
            }
        }
        Ok(ScoreSequence::new(values)?)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn contains_value(&self, v: u32) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    /// The score sequence of the reversed tournament: entry i becomes
    /// (n-1) - s_{n+1-i}. An involution.
    pub fn dual(&self) -> ScoreSequence {
        let top = self.values.len() as u32 - 1;
        let values: Vec<u32> = self.values.iter().rev().map(|&v| top - v).collect();
        debug_assert!(landau_check(&values).is_ok());
        ScoreSequence { values }
    }

    /// One reduction step, clauses tried in the fixed order 4.1-zero,
    /// 4.1-max, 4.3-low, 4.3-high. Returns `None` when no clause applies.
    /// Every clause is a classification-preserving equivalence.
    pub fn reduce(&self) -> Option<Reduction> {
        let n = self.values.len();
        if n < 2 {
            return None;
        }
        let top = n as u32 - 1;
        let (clause, mut values) = if self.values[0] == 0 {
            // Drop the out-degree-0 vertex; every other vertex beat it.
            let v: Vec<u32> = self.values[1..].iter().map(|&x| x - 1).collect();
            (ReduceClause::StripZero, v)
        } else if self.values[n - 1] == top {
            // The out-degree-(n-1) vertex beat everyone; nothing else changes.
            (ReduceClause::StripMax, self.values[..n - 1].to_vec())
        } else if self.values[0] == 1 && self.values[1] == 1 {
            let mut v = vec![1u32];
            v.extend(self.values[2..].iter().map(|&x| x - 1));
            (ReduceClause::LowOnes, v)
        } else if n >= 2 && self.values[n - 1] == top - 1 && self.values[n - 2] == top - 1 {
            let mut v = self.values[..n - 2].to_vec();
            v.push(top - 2);
            (ReduceClause::HighPair, v)
        } else {
            return None;
        };
        values.sort_unstable();
        let result = ScoreSequence::new(values)
            .expect("reduced sequence must satisfy the score-sequence invariants");
        Some(Reduction { clause, result })
    }

    /// All distinct score sequences of length n+1 obtained by adding a vertex
    /// of out-degree `d`: insert `d` and increment exactly n-d existing
    /// entries (the vertices that beat the new one). Enumerated without
    /// duplicates via per-value multiplicity combinations; sorted output.
    pub fn extend(&self, d: u32) -> Result<Vec<ScoreSequence>, ExtendError> {
        let n = self.values.len();
        if d as usize > n {
            return Err(ExtendError::DegreeOutOfRange { d, n });
        }
        let increments = n - d as usize;
        // Runs of equal values with multiplicities.
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &v in &self.values {
            match runs.last_mut() {
                Some((rv, count)) if *rv == v => *count += 1,
                _ => runs.push((v, 1)),
            }
        }
        let mut results: std::collections::BTreeSet<ScoreSequence> = Default::default();
        let mut picks = vec![0usize; runs.len()];
        fn choose(
            runs: &[(u32, usize)],
            idx: usize,
            remaining: usize,
            picks: &mut [usize],
            d: u32,
            results: &mut std::collections::BTreeSet<ScoreSequence>,
        ) {
            if idx == runs.len() {
                if remaining != 0 {
                    return;
                }
                let mut values = Vec::new();
                for (i, &(v, count)) in runs.iter().enumerate() {
                    for _ in 0..count - picks[i] {
                        values.push(v);
                    }
                    for _ in 0..picks[i] {
                        values.push(v + 1);
                    }
                }
                values.push(d);
                values.sort_unstable();
                let seq = ScoreSequence::new(values)
                    .expect("every extension of a valid sequence is realizable");
                results.insert(seq);
                return;
            }
            let avail: usize = runs[idx + 1..].iter().map(|&(_, c)| c).sum();
            let lo = remaining.saturating_sub(avail);
            let hi = remaining.min(runs[idx].1);
            for take in lo..=hi {
                picks[idx] = take;
                choose(runs, idx + 1, remaining - take, picks, d, results);
            }
            picks[idx] = 0;
        }
        choose(&runs, 0, increments, &mut picks, d, &mut results);
        Ok(results.into_iter().collect())
    }

    /// True iff the multiset union of the fragments is a sub-multiset of
    /// this sequence's values.
    pub fn contains_fragments(&self, frags: &[Fragment]) -> bool {
        let mut need: BTreeMap<u32, usize> = BTreeMap::new();
        for frag in frags {
            for &v in frag.values() {
                *need.entry(v).or_insert(0) += 1;
            }
        }
        self.covers(&need)
    }

    /// Sub-multiset test against an explicit list of needed values.
    pub fn contains_submultiset(&self, needed: &[u32]) -> bool {
        let mut need: BTreeMap<u32, usize> = BTreeMap::new();
        for &v in needed {
            *need.entry(v).or_insert(0) += 1;
        }
        self.covers(&need)
    }

    fn covers(&self, need: &BTreeMap<u32, usize>) -> bool {
        let mut have: BTreeMap<u32, usize> = BTreeMap::new();
        for &v in &self.values {
            *have.entry(v).or_insert(0) += 1;
        }
        need.iter()
            .all(|(v, &count)| have.get(v).copied().unwrap_or(0) >= count)
    }
}

impl fmt::Display for ScoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for ScoreSequence {
    type Err = ParseSequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScoreSequence::parse(s, false)
    }
}

/// Which reduction clause fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceClause {
    /// Strip a 0 and decrement the remaining entries.
    StripZero,
    /// Strip an n-1, leaving the rest unchanged.
    StripMax,
    /// (1, 1, s3, ...) becomes (1, s3 - 1, ...).
    LowOnes,
    /// (..., n-2, n-2) becomes (..., n-3).
    HighPair,
}

impl ReduceClause {
    /// The rule family the clause belongs to ("4.1" or "4.3").
    pub fn rule_name(&self) -> &'static str {
        match self {
            ReduceClause::StripZero | ReduceClause::StripMax => "4.1",
            ReduceClause::LowOnes | ReduceClause::HighPair => "4.3",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            ReduceClause::StripZero => "contains 0: drop that vertex and decrement the rest",
            ReduceClause::StripMax => "contains n-1: drop that vertex",
            ReduceClause::LowOnes => "starts 1, 1: merge into a single 1 and decrement the rest",
            ReduceClause::HighPair => "ends n-2, n-2: merge into a single n-3",
        }
    }
}

/// Result of one reduction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub clause: ReduceClause,
    pub result: ScoreSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("out-degree {d} out of range 0..={n} for the added vertex")]
    DegreeOutOfRange { d: u32, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("length {n} out of range 1..={max}")]
    OutOfRange { n: usize, max: usize },
}

/// A multiset of values to look for inside a score sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fragment {
    values: Vec<u32>,
}

impl Fragment {
    pub fn new(mut values: Vec<u32>) -> Self {
        values.sort_unstable();
        Fragment { values }
    }

    /// Same text format as sequences; order does not matter.
    pub fn parse(text: &str) -> Result<Self, ParseSequenceError> {
        Ok(Fragment::new(parse_values(text)?))
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All valid score sequences of length `n`, lexicographically sorted.
/// Capped at [`DEFAULT_MAX_N`]; use [`enumerate_with_cap`] to raise it.
pub fn enumerate(n: usize) -> Result<Vec<ScoreSequence>, EnumerateError> {
    enumerate_with_cap(n, DEFAULT_MAX_N)
}

/// All valid score sequences of length `n` for a caller-chosen cap.
pub fn enumerate_with_cap(n: usize, max_n: usize) -> Result<Vec<ScoreSequence>, EnumerateError> {
    if n < 1 || n > max_n {
        return Err(EnumerateError::OutOfRange { n, max: max_n });
    }
    let total = (n as u64) * (n as u64 - 1) / 2;
    let max_value = n as u32 - 1;
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(n);
    gen_sequences(n, total, max_value, 0, 0, &mut cur, &mut out);
    Ok(out)
}

fn gen_sequences(
    n: usize,
    total: u64,
    max_value: u32,
    pos: usize,
    sum: u64,
    cur: &mut Vec<u32>,
    out: &mut Vec<ScoreSequence>,
) {
    if pos == n {
        if sum == total {
            out.push(ScoreSequence {
                values: cur.clone(),
            });
        }
        return;
    }
    let low = cur.last().copied().unwrap_or(0);
    let remaining = (n - pos) as u64;
    for c in low..=max_value {
        let new_sum = sum + c as u64;
        // Landau prefix condition at k = pos + 1.
        let required = (pos as u64 + 1) * (pos as u64) / 2;
        if new_sum < required {
            continue;
        }
        // All later values are >= c, so the total must still be reachable
        // from below, and must not already be overshot.
        if new_sum + (remaining - 1) * (c as u64) > total {
            break;
        }
        if new_sum + (remaining - 1) * (max_value as u64) < total {
            continue;
        }
        cur.push(c);
        gen_sequences(n, total, max_value, pos + 1, new_sum, cur, out);
        cur.pop();
    }
}
