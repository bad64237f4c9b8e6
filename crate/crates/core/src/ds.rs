//! Davenport-Schinzel sequences and the K_{3,3}-free ordered-graph lower
//! bound built from them.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::budget::Budget;
use crate::graph::{Graph, OrderedGraph};
use crate::ordered::{bipartite_split, find_complete_bipartite, find_ordered_pattern, h0, h1, KttSearch, KttWitness};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DsError {
    #[error("letter {letter} at position {position} outside 1..={n}")]
    LetterOutOfRange { position: usize, letter: usize, n: usize },
    #[error("order s must be at least 1")]
    InvalidOrder,
    #[error("alphabet size must be at least {min}, got {n}")]
    AlphabetTooSmall { n: usize, min: usize },
    #[error("sequence is not a DS(3) sequence: {0}")]
    NotDs3(DsViolation),
    #[error("letter {letter} occurs {count} time(s), need at least 2")]
    SingleOccurrence { letter: usize, count: usize },
    #[error("search budget exhausted")]
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DsViolation {
    #[error("equal letters at positions {position} and {}", position + 1)]
    ConsecutiveRepeat { position: usize },
    #[error("alternation of {a} and {b} at positions {positions:?}")]
    Alternation { a: usize, b: usize, positions: Vec<usize> },
}

/// Sequence over the alphabet `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DsSequence {
    n: usize,
    letters: Vec<usize>,
}

impl DsSequence {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<DsSequence, DsError> {
        if let Some(position) = letters.iter().position(|&l| l == 0 || l > n) {
            return Err(DsError::LetterOutOfRange { position, letter: letters[position], n });
        }
        Ok(DsSequence { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence count of each letter, indexed by letter (index 0 unused).
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.n + 1];
        for &l in &self.letters {
            c[l] += 1;
        }
        c
    }
}

/// Checks for immediate repeats and for an alternation `a, b, a, b, ...` of
/// length `s + 2`. Reports the first repeat, otherwise the alternation of the
/// lexicographically first ordered pair `(a, b)`.
pub fn is_davenport_schinzel(seq: &DsSequence, s: usize) -> Result<(), DsViolation> {
    assert!(s >= 1, "order must be at least 1");
    let w = seq.letters();
    if let Some(position) = w.windows(2).position(|p| p[0] == p[1]) {
        return Err(DsViolation::ConsecutiveRepeat { position });
    }
    for a in 1..=seq.n() {
        for b in 1..=seq.n() {
            if a == b {
                continue;
            }
            // Greedy earliest matching yields a longest alternation starting with a.
            let mut positions = Vec::new();
            for (p, &l) in w.iter().enumerate() {
                let want = if positions.len() % 2 == 0 { a } else { b };
                if l == want {
                    positions.push(p);
                    if positions.len() == s + 2 {
                        return Err(DsViolation::Alternation { a, b, positions });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Per-pair state for the incremental check: run count of the sequence
/// restricted to `{a, b}` and the last letter of that restriction.
struct PairState {
    n: usize,
    runs: Vec<usize>,
    last: Vec<usize>,
}

impl PairState {
    fn new(n: usize) -> Self {
        PairState { n, runs: vec![0; (n + 1) * (n + 1)], last: vec![0; (n + 1) * (n + 1)] }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        a.min(b) * (self.n + 1) + a.max(b)
    }
}

/// Exact `λ_s(n)` with a witness, by depth-first search over sequences whose
/// letters first appear in increasing order.
pub fn lambda_bruteforce(s: usize, n: usize, budget: &mut Budget) -> Result<(usize, DsSequence), DsError> {
    if s == 0 {
        return Err(DsError::InvalidOrder);
    }
    let mut st = PairState::new(n);
    let mut cur = Vec::new();
    let mut best = Vec::new();
    dfs(s, n, 0, &mut st, &mut cur, &mut best, budget)?;
    Ok((best.len(), DsSequence { n, letters: best }))
}

fn dfs(
    s: usize,
    n: usize,
    used: usize,
    st: &mut PairState,
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<(), DsError> {
    if !budget.tick() {
        return Err(DsError::BudgetExceeded);
    }
    if cur.len() > best.len() {
        best.clone_from(cur);
    }
    let mut changed: Vec<usize> = Vec::with_capacity(n);
    for x in 1..=(used + 1).min(n) {
        if cur.last() == Some(&x) {
            continue;
        }
        changed.clear();
        let mut ok = true;
        for y in 1..=n {
            if y == x {
                continue;
            }
            let k = st.idx(x, y);
            if st.last[k] != x {
                if st.runs[k] + 1 >= s + 2 {
                    ok = false;
                    break;
                }
                changed.push(k);
            }
        }
        if !ok {
            continue;
        }
        let saved: Vec<(usize, usize, usize)> = changed.iter().map(|&k| (k, st.runs[k], st.last[k])).collect();
        for &k in &changed {
            st.runs[k] += 1;
            st.last[k] = x;
        }
        cur.push(x);
        let r = dfs(s, n, used.max(x), st, cur, best, budget);
        cur.pop();
        for (k, runs, last) in saved {
            st.runs[k] = runs;
            st.last[k] = last;
        }
        r?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ds3Strategy {
    /// `1, 2, 1, 3, 1, ..., n, 1` with every singleton letter given a second
    /// occurrence.
    Baseline,
    /// A maximum-length sequence from [`lambda_bruteforce`]; small `n` only.
    BruteSmall,
}

/// A DS(3) sequence over `1..=n` in which every letter occurs at least twice
/// when `n >= 2`. For `n = 1` the result is the single letter `(1)`.
pub fn generate_ds3(n: usize, strategy: Ds3Strategy, budget: &mut Budget) -> Result<DsSequence, DsError> {
    if n == 0 {
        return Err(DsError::AlphabetTooSmall { n, min: 1 });
    }
    let seq = match strategy {
        Ds3Strategy::BruteSmall => lambda_bruteforce(3, n, budget)?.1,
        Ds3Strategy::Baseline => {
            let mut letters = vec![1];
            for i in 2..=n {
                letters.push(i);
                letters.push(1);
            }
            DsSequence { n, letters }
        }
    };
    Ok(if n >= 2 { pad_singletons(seq) } else { seq })
}

/// Gives each letter occurring once a second occurrence at the first
/// position, scanning from the right, that keeps the sequence DS(3).
pub fn pad_singletons(mut seq: DsSequence) -> DsSequence {
    for letter in 1..=seq.n() {
        if seq.counts()[letter] != 1 {
            continue;
        }
        for pos in (0..=seq.len()).rev() {
            let mut trial = seq.letters.clone();
            trial.insert(pos, letter);
            let trial = DsSequence { n: seq.n, letters: trial };
            if is_davenport_schinzel(&trial, 3).is_ok() {
                seq = trial;
                break;
            }
        }
    }
    seq
}

/// Positions of the first and last occurrence of every letter, sorted.
pub fn extreme_positions(seq: &DsSequence) -> Vec<usize> {
    let mut first = vec![usize::MAX; seq.n() + 1];
    let mut last = vec![usize::MAX; seq.n() + 1];
    for (p, &l) in seq.letters().iter().enumerate() {
        if first[l] == usize::MAX {
            first[l] = p;
        }
        last[l] = p;
    }
    let mut out: Vec<usize> = first[1..].iter().chain(&last[1..]).copied().filter(|&p| p != usize::MAX).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Ordered graph on the `2n` extreme appearances (in sequence order). The
/// sequence is cut into intervals each ending at an extreme appearance, and
/// every non-extreme occurrence of a letter `i` joins the leftmost appearance
/// of `i` to the appearance ending its interval.
pub fn walczak_graph(seq: &DsSequence) -> Result<OrderedGraph, DsError> {
    is_davenport_schinzel(seq, 3).map_err(DsError::NotDs3)?;
    let counts = seq.counts();
    if let Some(letter) = (1..=seq.n()).find(|&l| counts[l] < 2) {
        return Err(DsError::SingleOccurrence { letter, count: counts[letter] });
    }
    let n = seq.n();
    let w = seq.letters();
    let extremes = extreme_positions(seq);
    debug_assert_eq!(extremes.len(), 2 * n);
    // Vertex index of each extreme position; leftmost vertex of each letter.
    let mut vertex_at = vec![usize::MAX; w.len()];
    let mut left_vertex = vec![usize::MAX; n + 1];
    for (v, &p) in extremes.iter().enumerate() {
        vertex_at[p] = v;
        if left_vertex[w[p]] == usize::MAX {
            left_vertex[w[p]] = v;
        }
    }
    let mut g = Graph::empty(2 * n);
    let mut start = 0;
    for &end in &extremes {
        let interval = &w[start..=end];
        let mut seen = vec![false; n + 1];
        for &l in interval {
            assert!(!seen[l], "letters within an interval are distinct");
            seen[l] = true;
        }
        for p in start..end {
            let added = g.add_edge(left_vertex[w[p]], vertex_at[end]).expect("vertices in range");
            assert!(added, "each non-extreme occurrence yields a new edge");
        }
        start = end + 1;
    }
    assert_eq!(g.edge_count(), w.len() - 2 * n);
    Ok(OrderedGraph::new(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K33Verdict {
    Free,
    Witness(KttWitness),
    /// Not settled exhaustively; `implied_free` records that the graph is
    /// H0- and H1-free, which forces K_{3,3}-freeness.
    Inconclusive {
        implied_free: bool,
    },
}

/// Largest `2n` for which the pipeline runs the exhaustive K_{3,3} search.
pub const K33_EXHAUSTIVE_MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub sequence: DsSequence,
    pub graph: OrderedGraph,
    pub edge_count: usize,
    pub h0_free: bool,
    pub h1_free: bool,
    pub k33_verdict: K33Verdict,
}

/// DS(3) sequence, its interval graph, removal of edges between consecutive
/// vertices, and the bipartite split; the result is re-checked for H0, H1
/// and (for at most 64 vertices) K_{3,3}.
pub fn k33_free_lowerbound(
    n: usize,
    strategy: Ds3Strategy,
    budget: &mut Budget,
) -> Result<LowerBoundCertificate, DsError> {
    if n < 2 {
        return Err(DsError::AlphabetTooSmall { n, min: 2 });
    }
    let sequence = generate_ds3(n, strategy, budget)?;
    let mut g = walczak_graph(&sequence)?;
    for v in 0..g.n() - 1 {
        g.graph_mut().remove_edge(v, v + 1);
    }
    let graph = bipartite_split(&g).kept_graph();
    let h0_free = find_ordered_pattern(&graph, &h0()).is_none();
    let h1_free = find_ordered_pattern(&graph, &h1()).is_none();
    let k33_verdict = if graph.n() <= K33_EXHAUSTIVE_MAX_VERTICES {
        match find_complete_bipartite(&graph, 3, budget).expect("t = 3") {
            KttSearch::Found(w) => K33Verdict::Witness(w),
            KttSearch::Free => K33Verdict::Free,
            KttSearch::Inconclusive => K33Verdict::Inconclusive { implied_free: h0_free && h1_free },
        }
    } else {
        K33Verdict::Inconclusive { implied_free: h0_free && h1_free }
    };
    Ok(LowerBoundCertificate { edge_count: graph.edge_count(), sequence, graph, h0_free, h1_free, k33_verdict })
}

/// `A_k(j)` capped at `cap`: `A_1(j) = 2j`, `A_k(1) = 2`,
/// `A_k(j) = A_{k-1}(A_k(j - 1))`.
fn ackermann_capped(k: usize, j: u64, cap: u64) -> u64 {
    if k == 1 {
        return j.saturating_mul(2).min(cap);
    }
    let mut v = 2;
    for _ in 1..j {
        if v >= cap {
            return cap;
        }
        v = ackermann_capped(k - 1, v, cap);
    }
    v.min(cap)
}

/// Smallest `k >= 1` with `A_k(k) >= n`.
pub fn inverse_ackermann(n: u64) -> usize {
    let mut k = 1;
    while ackermann_capped(k, k as u64, n) < n {
        k += 1;
    }
    k
}
