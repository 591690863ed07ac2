//! Tournaments and post-contraction digraphs: construction, realization from
//! a score sequence, consistent-cycle enumeration, consistent edge
//! contraction, and small-scale exhaustive oracles.
//!
//! Adjacency is a bitset per vertex (`out[u]` has bit `v` set when the arc
//! u->v is present), which makes arc sets duplicate-free by construction and
//! keeps symmetric pairs (u->v together with v->u) representable.

use std::fmt;

use thiserror::Error;

use crate::scoreseq::{landau_check, ScoreSequence};

/// Size guard for exhaustive cycle enumeration. The classification pipeline
/// never needs more than 8 vertices; 10 leaves headroom.
pub const CYCLE_ENUM_MAX_VERTICES: usize = 10;

/// Hard representation limit (bitset rows are u32).
const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cycle enumeration supports at most {max} vertices, got {n}")]
pub struct CycleGuardError {
    pub n: usize,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("{0} -> {1} is not an arc")]
    NotAnArc(usize, usize),
    #[error(
        "arc {0} -> {1} is not contractible (tail out-degree and head in-degree both exceed 1)"
    )]
    NotContractible(usize, usize),
}

/// A loop-free directed graph. Symmetric arc pairs are allowed; parallel
/// same-direction arcs cannot be represented, matching the convention that
/// of any same-direction pair only one survives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u32>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "at most {MAX_VERTICES} vertices supported"
        );
        Digraph { n, out: vec![0; n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, DigraphError> {
        let mut g = Digraph::empty(n);
        for &(u, v) in arcs {
            if u >= n {
                return Err(DigraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(DigraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(DigraphError::SelfLoop { v });
            }
            if g.has_arc(u, v) {
                return Err(DigraphError::DuplicateArc(u, v));
            }
            g.out[u] |= 1 << v;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & (1 << v) != 0
    }

    pub fn has_symmetric_pair(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_arc(u, v) {
                    arcs.push((u, v));
                }
            }
        }
        arcs
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.out[u];
        (0..self.n).filter(move |v| mask & (1 << v) != 0)
    }

    /// Every arc flipped.
    pub fn reverse(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in self.out_neighbors(u) {
                g.out[v] |= 1 << u;
            }
        }
        g
    }

    /// All consistently oriented simple cycles, each reported once with the
    /// canonical start (minimum vertex first, traversal in arc direction).
    /// 2-cycles appear exactly when a symmetric pair exists.
    pub fn consistent_cycles(&self) -> Result<Vec<Cycle>, CycleGuardError> {
        if self.n > CYCLE_ENUM_MAX_VERTICES {
            return Err(CycleGuardError {
                n: self.n,
                max: CYCLE_ENUM_MAX_VERTICES,
            });
        }
        let mut found = Vec::new();
        let mut path = Vec::new();
        for start in 0..self.n {
            path.push(start);
            self.cycle_dfs(start, start, 1 << start, &mut path, &mut found);
            path.pop();
        }
        found.sort();
        Ok(found)
    }

    fn cycle_dfs(
        &self,
        start: usize,
        current: usize,
        visited: u32,
        path: &mut Vec<usize>,
        found: &mut Vec<Cycle>,
    ) {
        for next in self.out_neighbors(current) {
            if next == start {
                if path.len() >= 2 {
                    found.push(Cycle {
                        vertices: path.clone(),
                    });
                }
            } else if next > start && visited & (1 << next) == 0 {
                path.push(next);
                self.cycle_dfs(start, next, visited | (1 << next), path, found);
                path.pop();
            }
        }
    }

    /// All unordered pairs of vertex-disjoint consistently oriented cycles.
    pub fn consistent_cycle_pairs(&self) -> Result<Vec<(Cycle, Cycle)>, CycleGuardError> {
        let cycles = self.consistent_cycles()?;
        let masks: Vec<u32> = cycles.iter().map(|c| c.vertex_mask()).collect();
        let mut pairs = Vec::new();
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                if masks[i] & masks[j] == 0 {
                    pairs.push((cycles[i].clone(), cycles[j].clone()));
                }
            }
        }
        Ok(pairs)
    }

    /// Arcs v->w with v of out-degree 1 (v is a sink once the arc is removed)
    /// or w of in-degree 1 (w is a source once the arc is removed).
    pub fn contractible_arcs(&self) -> Vec<(usize, usize)> {
        let mut in_deg = vec![0usize; self.n];
        for u in 0..self.n {
            for v in self.out_neighbors(u) {
                in_deg[v] += 1;
            }
        }
        self.arcs()
            .into_iter()
            .filter(|&(u, v)| self.out_degree(u) == 1 || in_deg[v] == 1)
            .collect()
    }

    /// Contract a contractible arc v->w: the arc is deleted, the endpoints
    /// identified, the loop from a reverse arc dropped, and same-direction
    /// parallels merged. The merged vertex takes index min(v, w); vertices
    /// above max(v, w) shift down by one.
    pub fn contract(&self, (v, w): (usize, usize)) -> Result<Digraph, ContractError> {
        if !self.has_arc(v, w) {
            return Err(ContractError::NotAnArc(v, w));
        }
        if self.out_degree(v) != 1 && self.in_degree(w) != 1 {
            return Err(ContractError::NotContractible(v, w));
        }
        let keep = v.min(w);
        let drop = v.max(w);
        let pair_mask: u32 = (1 << v) | (1 << w);
        let remap_mask = |mask: u32| -> u32 {
            let mut out = 0u32;
            if mask & pair_mask != 0 {
                out |= 1 << keep;
            }
            let mut rest = mask & !pair_mask;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= 1 << if b > drop { b - 1 } else { b };
            }
            out
        };
        let mut g = Digraph::empty(self.n - 1);
        // Arcs out of the merged vertex: union of both endpoints' arcs,
        // minus anything between the pair itself.
        g.out[keep] = remap_mask((self.out[v] | self.out[w]) & !pair_mask);
        for x in 0..self.n {
            if x == v || x == w {
                continue;
            }
            let nx = if x > drop { x - 1 } else { x };
            g.out[nx] = remap_mask(self.out[x]);
        }
        Ok(g)
    }

    /// Edge-list text: one arc per line, "u v" meaning u->v.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parse edge-list text: "u v" per line, 0-indexed, '#' comments and
    /// blank lines ignored. The vertex count is one past the largest index.
    pub fn parse_edge_list(text: &str) -> Result<Digraph, EdgeListError> {
        let mut arcs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |part: Option<&str>| -> Result<usize, EdgeListError> {
                part.and_then(|p| p.parse().ok())
                    .ok_or(EdgeListError::BadLine { line: lineno + 1 })
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(EdgeListError::BadLine { line: lineno + 1 });
            }
            arcs.push((u, v));
        }
        if arcs.is_empty() {
            return Err(EdgeListError::NoArcs);
        }
        let n = arcs.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
        if n > MAX_VERTICES {
            return Err(EdgeListError::TooManyVertices { n });
        }
        Ok(Digraph::from_arcs(n, &arcs)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected \"u v\"")]
    BadLine { line: usize },
    #[error("no arcs in edge list")]
    NoArcs,
    #[error("edge list needs {n} vertices, more than supported")]
    TooManyVertices { n: usize },
    #[error(transparent)]
    Graph(#[from] DigraphError),
}

/// A consistently oriented simple cycle, stored with its minimum vertex
/// first and successive vertices in arc direction. Length 2 only for
/// symmetric pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_mask(&self) -> u32 {
        self.vertices.iter().fold(0, |m, &v| m | (1 << v))
    }

    /// Canonicalize an arbitrary rotation/direction of a cycle against a
    /// host digraph: minimum vertex first, traversal in arc direction.
    /// Returns `None` if the vertices do not form a consistent cycle.
    pub fn canonical_in(g: &Digraph, vertices: &[usize]) -> Option<Cycle> {
        let k = vertices.len();
        if k < 2 {
            return None;
        }
        let forward = (0..k).all(|i| g.has_arc(vertices[i], vertices[(i + 1) % k]));
        let backward = (0..k).all(|i| g.has_arc(vertices[(i + 1) % k], vertices[i]));
        let ordered: Vec<usize> = if forward {
            vertices.to_vec()
        } else if backward {
            vertices.iter().rev().copied().collect()
        } else {
            return None;
        };
        let min_pos = ordered
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .unwrap();
        let mut rotated = Vec::with_capacity(k);
        for i in 0..k {
            rotated.push(ordered[(min_pos + i) % k]);
        }
        Some(Cycle { vertices: rotated })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" -> "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TournamentError {
    #[error(transparent)]
    Graph(#[from] DigraphError),
    #[error("vertices {0} and {1} have no arc between them")]
    MissingPair(usize, usize),
    #[error("vertices {0} and {1} have arcs in both directions")]
    SymmetricPair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("labeled enumeration supports at most {max} vertices, got {n}")]
pub struct LabeledEnumError {
    pub n: usize,
    pub max: usize,
}

/// A tournament: exactly one directed arc between every pair of distinct
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    g: Digraph,
}

impl Tournament {
    pub fn from_digraph(g: Digraph) -> Result<Self, TournamentError> {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                match (g.has_arc(u, v), g.has_arc(v, u)) {
                    (true, true) => return Err(TournamentError::SymmetricPair(u, v)),
                    (false, false) => return Err(TournamentError::MissingPair(u, v)),
                    _ => {}
                }
            }
        }
        Ok(Tournament { g })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, TournamentError> {
        Tournament::from_digraph(Digraph::from_arcs(n, arcs)?)
    }

    /// The transitive tournament: vertex i beats every vertex below it, so
    /// the score sequence is (0, 1, ..., n-1) with vertex order matching
    /// rank order.
    pub fn transitive(n: usize) -> Self {
        let mut g = Digraph::empty(n);
        for i in 0..n {
            for j in 0..i {
                g.out[i] |= 1 << j;
            }
        }
        Tournament { g }
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn digraph(&self) -> &Digraph {
        &self.g
    }

    pub fn into_digraph(self) -> Digraph {
        self.g
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.g.has_arc(u, v)
    }

    /// Sorted out-degree sequence plus the vertex-to-rank assignment:
    /// `ranks[v]` is the position of vertex v in the sorted sequence, with
    /// ties broken by vertex index.
    pub fn scores(&self) -> (ScoreSequence, Vec<usize>) {
        let n = self.n();
        let degrees: Vec<u32> = (0..n).map(|v| self.g.out_degree(v) as u32).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (degrees[v], v));
        let mut ranks = vec![0usize; n];
        for (rank, &v) in order.iter().enumerate() {
            ranks[v] = rank;
        }
        let values: Vec<u32> = order.iter().map(|&v| degrees[v]).collect();
        let seq = ScoreSequence::new(values).expect("tournament scores always satisfy Landau");
        (seq, ranks)
    }

    pub fn score_sequence(&self) -> ScoreSequence {
        self.scores().0
    }

    pub fn reverse(&self) -> Tournament {
        Tournament {
            g: self.g.reverse(),
        }
    }

    /// Deterministic realization of a valid score sequence: backtracking
    /// over vertex pairs in lexicographic order, pruned by residual degree
    /// bounds and Landau feasibility of the untouched suffix. Vertex k of
    /// the result has out-degree `s.values()[k]`.
    pub fn realize(s: &ScoreSequence) -> Tournament {
        Tournament::realize_with(s, &[]).expect("every valid score sequence is realizable")
    }

    /// Realization with forced arcs (given as (winner, loser) vertex pairs
    /// in the rank indexing used by `realize`). Returns `None` when no
    /// tournament matches.
    pub fn realize_with(s: &ScoreSequence, forced: &[(usize, usize)]) -> Option<Tournament> {
        realize_backtrack(s, forced, None)
    }

    /// Like `realize`, but the branch tried first at each pair is chosen
    /// from a seeded generator. Deterministic for a fixed seed.
    pub fn realize_seeded(s: &ScoreSequence, seed: u64) -> Tournament {
        realize_backtrack(s, &[], Some(seed)).expect("every valid score sequence is realizable")
    }

    /// All 2^(n(n-1)/2) labeled tournaments on n <= 6 vertices, optionally
    /// filtered to a score sequence.
    pub fn enumerate_labeled(
        n: usize,
        filter: Option<&ScoreSequence>,
    ) -> Result<impl Iterator<Item = Tournament> + '_, LabeledEnumError> {
        const MAX: usize = 6;
        if n > MAX {
            return Err(LabeledEnumError { n, max: MAX });
        }
        let pairs: Vec<(usize, usize)> = pair_order(n);
        let count = 1u64 << pairs.len();
        Ok((0..count).filter_map(move |mask| {
            let mut g = Digraph::empty(n);
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    g.out[i] |= 1 << j;
                } else {
                    g.out[j] |= 1 << i;
                }
            }
            let t = Tournament { g };
            match filter {
                Some(want) if &t.score_sequence() != want => None,
                _ => Some(t),
            }
        }))
    }
}

fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

fn realize_backtrack(
    s: &ScoreSequence,
    forced: &[(usize, usize)],
    seed: Option<u64>,
) -> Option<Tournament> {
    use rand::{Rng, SeedableRng};

    let n = s.n();
    let target: Vec<usize> = s.values().iter().map(|&v| v as usize).collect();
    let pairs = pair_order(n);
    // Per-pair forced orientation: Some(true) = lower-index vertex wins.
    let mut force: Vec<Option<bool>> = vec![None; pairs.len()];
    for &(winner, loser) in forced {
        let key = if winner < loser {
            (winner, loser)
        } else {
            (loser, winner)
        };
        let idx = pairs.iter().position(|&p| p == key)?;
        let low_wins = winner < loser;
        if force[idx].is_some_and(|f| f != low_wins) {
            return None;
        }
        force[idx] = Some(low_wins);
    }
    let bias: Vec<bool> = match seed {
        Some(seed) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..pairs.len()).map(|_| rng.random()).collect()
        }
        None => vec![true; pairs.len()],
    };

    struct State {
        n: usize,
        target: Vec<usize>,
        used: Vec<usize>,
        out: Vec<u32>,
    }

    impl State {
        // Undecided pairs still involving v once pair (i, j) is decided.
        fn remaining(&self, v: usize, i: usize, j: usize) -> usize {
            if v == i {
                self.n - 1 - j
            } else {
                debug_assert_eq!(v, j);
                (self.n - 1 - j) + (j - i - 1)
            }
        }

        fn feasible_suffix(&self, from: usize) -> bool {
            // Once vertex `from - 1` is complete, the undecided pairs form a
            // complete graph on {from..n-1}; the residual demands must
            // themselves satisfy Landau's condition there.
            let mut residual: Vec<i64> = (from..self.n)
                .map(|v| self.target[v] as i64 - self.used[v] as i64)
                .collect();
            if residual.iter().any(|&r| r < 0) {
                return false;
            }
            residual.sort_unstable();
            let m = residual.len() as i64;
            let mut sum = 0i64;
            for (k, &r) in residual.iter().enumerate() {
                sum += r;
                let k = k as i64 + 1;
                if sum < k * (k - 1) / 2 {
                    return false;
                }
            }
            sum == m * (m - 1) / 2
        }
    }

    fn solve(
        st: &mut State,
        pairs: &[(usize, usize)],
        force: &[Option<bool>],
        bias: &[bool],
        idx: usize,
    ) -> bool {
        if idx == pairs.len() {
            return true;
        }
        let (i, j) = pairs[idx];
        let options: &[bool] = match force[idx] {
            Some(low_wins) => {
                if low_wins {
                    &[true]
                } else {
                    &[false]
                }
            }
            None => {
                if bias[idx] {
                    &[true, false]
                } else {
                    &[false, true]
                }
            }
        };
        for &low_wins in options {
            let (winner, loser) = if low_wins { (i, j) } else { (j, i) };
            if st.used[winner] >= st.target[winner] {
                continue;
            }
            if st.target[loser] - st.used[loser] > st.remaining(loser, i, j) {
                continue;
            }
            st.used[winner] += 1;
            st.out[winner] |= 1 << loser;
            // Closing out vertex i's row: its degree must be exact and the
            // untouched suffix must stay realizable.
            let row_done = j == st.n - 1;
            let ok = (!row_done || (st.used[i] == st.target[i] && st.feasible_suffix(i + 1)))
                && solve(st, pairs, force, bias, idx + 1);
            if ok {
                return true;
            }
            st.used[winner] -= 1;
            st.out[winner] &= !(1 << loser);
        }
        false
    }

    let mut st = State {
        n,
        target,
        used: vec![0; n],
        out: vec![0; n],
    };
    if n == 1 {
        return Some(Tournament {
            g: Digraph::empty(1),
        });
    }
    if solve(&mut st, &pairs, &force, &bias, 0) {
        let g = Digraph {
            n,
            out: st.out.clone(),
        };
        debug_assert!(landau_check(Tournament { g: g.clone() }.score_sequence().values()).is_ok());
        Some(Tournament { g })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scoreseq::enumerate;

    fn seq(values: &[u32]) -> ScoreSequence {
        ScoreSequence::new(values.to_vec()).unwrap()
    }

    fn three_cycle() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn transitive_scores() {
        let (s, ranks) = Tournament::transitive(4).scores();
        assert_eq!(s, seq(&[0, 1, 2, 3]));
        assert_eq!(ranks, vec![0, 1, 2, 3]);
    }

    #[test]
    fn three_cycle_scores() {
        let t = Tournament::from_digraph(three_cycle()).unwrap();
        assert_eq!(t.score_sequence(), seq(&[1, 1, 1]));
    }

    #[test]
    fn tournament_rejects_incomplete_or_symmetric() {
        let missing = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            Tournament::from_digraph(missing),
            Err(TournamentError::MissingPair(0, 2))
        ));
        let symmetric = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(matches!(
            Tournament::from_digraph(symmetric),
            Err(TournamentError::SymmetricPair(0, 1))
        ));
    }

    #[test]
    fn realize_unique_transitive() {
        let t = Tournament::realize(&seq(&[0, 1, 2]));
        assert_eq!(t, Tournament::transitive(3));
    }

    #[test]
    fn realize_round_trips_n8() {
        for s in enumerate(8).unwrap() {
            let t = Tournament::realize(&s);
            assert_eq!(t.score_sequence(), s, "round trip failed for {s}");
        }
    }

    #[test]
    fn realize_round_trips_through_n11() {
        for n in 9..=11 {
            for s in enumerate(n).unwrap() {
                let t = Tournament::realize(&s);
                assert_eq!(t.score_sequence(), s, "round trip failed for {s}");
            }
        }
    }

    #[test]
    fn realize_1113() {
        let t = Tournament::realize(&seq(&[1, 1, 1, 3]));
        assert_eq!(t.score_sequence(), seq(&[1, 1, 1, 3]));
    }

    #[test]
    fn realize_seeded_round_trips() {
        let s = seq(&[1, 2, 2, 3, 5, 5, 5, 5]);
        for seed in 0..10u64 {
            let t = Tournament::realize_seeded(&s, seed);
            assert_eq!(t.score_sequence(), s);
        }
    }

    #[test]
    fn reverse_involution_and_dual() {
        let t = Tournament::realize(&seq(&[1, 2, 2, 3, 5, 5, 5, 5]));
        assert_eq!(t.reverse().reverse(), t);
        assert_eq!(t.reverse().score_sequence(), seq(&[2, 2, 2, 2, 4, 5, 5, 6]));
        let transitive = Tournament::transitive(4);
        assert_eq!(transitive.reverse().score_sequence(), seq(&[0, 1, 2, 3]));
    }

    #[test]
    fn transitive_has_no_cycles() {
        for n in 1..=8 {
            let t = Tournament::transitive(n);
            assert!(t.digraph().consistent_cycles().unwrap().is_empty());
        }
    }

    #[test]
    fn single_three_cycle() {
        let cycles = three_cycle().consistent_cycles().unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn symmetric_pair_two_cycle() {
        let g = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let cycles = g.consistent_cycles().unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1]);
    }

    #[test]
    fn cycle_guard() {
        let g = Digraph::empty(11);
        assert!(g.consistent_cycles().is_err());
    }

    #[test]
    fn cycle_pairs_examples() {
        assert!(Tournament::transitive(8)
            .digraph()
            .consistent_cycle_pairs()
            .unwrap()
            .is_empty());

        let two_triangles =
            Digraph::from_arcs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(two_triangles.consistent_cycle_pairs().unwrap().len(), 1);

        let hexagon =
            Digraph::from_arcs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(hexagon.consistent_cycles().unwrap().len(), 1);
        assert!(hexagon.consistent_cycle_pairs().unwrap().is_empty());
    }

    /// Independent cycle oracle: try every subset and every cyclic order.
    fn naive_cycles(g: &Digraph) -> Vec<Cycle> {
        use std::collections::BTreeSet;
        let n = g.n();
        let mut found: BTreeSet<Cycle> = BTreeSet::new();
        let vertices: Vec<usize> = (0..n).collect();
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = vertices
                .iter()
                .copied()
                .filter(|&v| mask & (1 << v) != 0)
                .collect();
            if subset.len() < 2 {
                continue;
            }
            permute(&subset, &mut Vec::new(), &mut |perm| {
                let k = perm.len();
                if (0..k).all(|i| g.has_arc(perm[i], perm[(i + 1) % k])) {
                    if let Some(c) = Cycle::canonical_in(g, perm) {
                        found.insert(c);
                    }
                }
            });
        }
        found.into_iter().collect()
    }

    fn permute(rest: &[usize], acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if rest.is_empty() {
            f(acc);
            return;
        }
        for (i, &v) in rest.iter().enumerate() {
            let mut next: Vec<usize> = rest.to_vec();
            next.remove(i);
            acc.push(v);
            permute(&next, acc, f);
            acc.pop();
        }
    }

    #[test]
    fn cycles_match_naive_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(2..=5);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(0.4) {
                        arcs.push((u, v));
                    }
                }
            }
            let g = Digraph::from_arcs(n, &arcs).unwrap();
            assert_eq!(g.consistent_cycles().unwrap(), naive_cycles(&g));
        }
    }

    #[test]
    fn contractible_examples() {
        assert_eq!(three_cycle().contractible_arcs().len(), 3);

        // All scores in [2, n-3]: no vertex has out-degree 1 or in-degree 1.
        let t = Tournament::realize(&seq(&[2, 2, 2, 3, 4, 5, 5, 5]));
        assert!(t.digraph().contractible_arcs().is_empty());
    }

    #[test]
    fn contractible_iff_scores_contain_1_or_n_minus_2() {
        for n in 2..=6 {
            for t in Tournament::enumerate_labeled(n, None).unwrap() {
                let s = t.score_sequence();
                let expected = s.contains_value(1) || s.contains_value(n as u32 - 2);
                assert_eq!(
                    !t.digraph().contractible_arcs().is_empty(),
                    expected,
                    "n = {n}, scores = {s}"
                );
            }
        }
    }

    #[test]
    fn contract_three_cycle_gives_symmetric_pair() {
        let g = three_cycle().contract((0, 1)).unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_symmetric_pair(0, 1));
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn contract_rejects_bad_arcs() {
        let g = three_cycle();
        assert!(matches!(
            g.contract((1, 0)),
            Err(ContractError::NotAnArc(1, 0))
        ));
        let t = Tournament::realize(&seq(&[2, 2, 2, 3, 4, 5, 5, 5]));
        let arc = t.digraph().arcs()[0];
        assert!(matches!(
            t.digraph().contract(arc),
            Err(ContractError::NotContractible(..))
        ));
    }

    #[test]
    fn contract_score_one_vertex_localizes_symmetric_pairs() {
        // Contracting the unique out-arc of a score-1 vertex leaves
        // symmetric arcs only at the merged vertex.
        let s = seq(&[1, 2, 3, 3, 4, 5, 5, 5]);
        let t = Tournament::realize(&s);
        let v = 0; // rank indexing: vertex 0 has score 1
        let x = t.digraph().out_neighbors(v).next().unwrap();
        let g = t.digraph().contract((v, x)).unwrap();
        assert_eq!(g.n(), 7);
        let merged = v.min(x);
        for u in 0..7 {
            for w in u + 1..7 {
                if g.has_symmetric_pair(u, w) {
                    assert!(u == merged || w == merged);
                }
            }
        }
    }

    #[test]
    fn contract_preserves_transitive_acyclicity() {
        for n in 3..=6 {
            let t = Tournament::transitive(n);
            for arc in t.digraph().contractible_arcs() {
                let g = t.digraph().contract(arc).unwrap();
                assert_eq!(g.n(), n - 1);
                assert!(g.consistent_cycles().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn labeled_enumeration_counts() {
        assert_eq!(Tournament::enumerate_labeled(3, None).unwrap().count(), 8);
        assert_eq!(Tournament::enumerate_labeled(4, None).unwrap().count(), 64);
        assert!(Tournament::enumerate_labeled(7, None).is_err());
    }

    #[test]
    fn enumeration_matches_labeled_score_vectors() {
        // Independent route to the per-length sequence sets: collect the
        // distinct score sequences of every labeled tournament.
        use std::collections::BTreeSet;
        for n in 1..=6 {
            let expected: Vec<ScoreSequence> = enumerate(n).unwrap();
            let observed: BTreeSet<ScoreSequence> = Tournament::enumerate_labeled(n, None)
                .unwrap()
                .map(|t| t.score_sequence())
                .collect();
            let observed: Vec<ScoreSequence> = observed.into_iter().collect();
            assert_eq!(observed, expected, "n = {n}");
        }
    }

    #[test]
    fn every_labeled_5_tournament_has_transitive_triangle() {
        for t in Tournament::enumerate_labeled(5, None).unwrap() {
            let mut found = false;
            'scan: for a in 0..5 {
                for b in 0..5 {
                    for c in 0..5 {
                        if a < b && b < c {
                            let cyclic = (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a))
                                || (t.has_arc(b, a) && t.has_arc(a, c) && t.has_arc(c, b));
                            if !cyclic {
                                found = true;
                                break 'scan;
                            }
                        }
                    }
                }
            }
            assert!(found);
        }
    }

    /// Brute-force tournament isomorphism for tiny n.
    fn isomorphic(a: &Tournament, b: &Tournament) -> bool {
        let n = a.n();
        if b.n() != n {
            return false;
        }
        let perms = {
            let mut all = Vec::new();
            permute(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut |p| {
                all.push(p.to_vec())
            });
            all
        };
        perms.iter().any(|p| {
            (0..n).all(|u| (0..n).all(|v| u == v || a.has_arc(u, v) == b.has_arc(p[u], p[v])))
        })
    }

    #[test]
    fn filtered_1113_all_isomorphic() {
        let filter = seq(&[1, 1, 1, 3]);
        let mut iter = Tournament::enumerate_labeled(4, Some(&filter)).unwrap();
        let first = iter
            .next()
            .expect("at least one tournament realizes (1,1,1,3)");
        for t in iter {
            assert!(isomorphic(&first, &t));
        }
    }

    #[test]
    fn extension_property_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let n = rng.random_range(2..=7);
            let mut arcs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random() {
                        arcs.push((i, j));
                    } else {
                        arcs.push((j, i));
                    }
                }
            }
            let t = Tournament::from_arcs(n, &arcs).unwrap();
            let s = t.score_sequence();
            // Add a concrete vertex with a random set of victories.
            let mut ext_arcs = arcs.clone();
            let mut d = 0u32;
            for v in 0..n {
                if rng.random() {
                    ext_arcs.push((n, v));
                    d += 1;
                } else {
                    ext_arcs.push((v, n));
                }
            }
            let extended = Tournament::from_arcs(n + 1, &ext_arcs).unwrap();
            let options = s.extend(d).unwrap();
            assert!(
                options.contains(&extended.score_sequence()),
                "extend({s}, {d}) misses {}",
                extended.score_sequence()
            );
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let t = Tournament::realize(&seq(&[1, 1, 2, 2]));
        let text = t.digraph().to_edge_list();
        let parsed = Digraph::parse_edge_list(&text).unwrap();
        assert_eq!(&parsed, t.digraph());
    }

    #[test]
    fn edge_list_comments_and_blanks() {
        let text = "# a triangle\n0 1\n\n1 2  # middle arc\n2 0\n";
        let g = Digraph::parse_edge_list(text).unwrap();
        assert_eq!(g, three_cycle());
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(matches!(
            Digraph::parse_edge_list("0 1 2\n"),
            Err(EdgeListError::BadLine { line: 1 })
        ));
        assert!(matches!(
            Digraph::parse_edge_list("0\n"),
            Err(EdgeListError::BadLine { line: 1 })
        ));
        assert!(matches!(
            Digraph::parse_edge_list("# only comments\n"),
            Err(EdgeListError::NoArcs)
        ));
        assert!(matches!(
            Digraph::parse_edge_list("0 0\n"),
            Err(EdgeListError::Graph(DigraphError::SelfLoop { v: 0 }))
        ));
    }
}
