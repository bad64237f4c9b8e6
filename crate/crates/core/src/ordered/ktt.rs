use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::graph::{Graph, GraphError};

/// Bipartition of a complete bipartite subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KttWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl KttWitness {
    /// Re-checks all `|a| * |b|` pairs against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.a.iter().all(|x| !self.b.contains(x)) && self.a.iter().all(|&x| self.b.iter().all(|&y| g.has_edge(x, y)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KttSearch {
    Found(KttWitness),
    Free,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

impl KttSearch {
    pub fn witness(&self) -> Option<&KttWitness> {
        match self {
            KttSearch::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, KttSearch::Free)
    }
}

pub(crate) enum Biclique {
    Found(Vec<usize>, Vec<usize>),
    None,
    OutOfBudget,
}

/// Finds `t` rows whose column sets share at least `t` columns. Rows are
/// tried in lexicographic order, so the returned rows are the
/// lexicographically smallest such set and the columns the smallest common
/// ones.
pub(crate) fn biclique_search(rows: &[FixedBitSet], width: usize, t: usize, budget: &mut Budget) -> Biclique {
    let candidates: Vec<usize> = (0..rows.len()).filter(|&r| rows[r].count_ones(..) >= t).collect();
    let mut full = FixedBitSet::with_capacity(width);
    full.insert_range(..);
    let mut chosen = Vec::with_capacity(t);
    match extend(rows, &candidates, 0, &full, t, &mut chosen, budget) {
        Some(Some(cols)) => Biclique::Found(chosen, cols),
        Some(None) => Biclique::None,
        None => Biclique::OutOfBudget,
    }
}

/// `None` when out of budget, `Some(None)` when exhausted without success.
fn extend(
    rows: &[FixedBitSet],
    candidates: &[usize],
    start: usize,
    common: &FixedBitSet,
    t: usize,
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
) -> Option<Option<Vec<usize>>> {
    if chosen.len() == t {
        return Some(Some(common.ones().take(t).collect()));
    }
    let need = t - chosen.len();
    for idx in start..candidates.len() {
        if candidates.len() - idx < need {
            break;
        }
        if !budget.tick() {
            return None;
        }
        let r = candidates[idx];
        let mut next = common.clone();
        next.intersect_with(&rows[r]);
        if next.count_ones(..) < t {
            continue;
        }
        chosen.push(r);
        match extend(rows, candidates, idx + 1, &next, t, chosen, budget) {
            Some(Some(cols)) => return Some(Some(cols)),
            Some(None) => {}
            None => return None,
        }
        chosen.pop();
    }
    Some(None)
}

/// Exact search for a `K_{t,t}` subgraph. Exhaustive over lexicographically
/// ordered `t`-subsets with common-neighbourhood pruning; returns
/// [`KttSearch::Inconclusive`] rather than guessing when `budget` runs out.
pub fn find_complete_bipartite(g: &Graph, t: usize, budget: &mut Budget) -> Result<KttSearch, GraphError> {
    if t == 0 {
        return Err(GraphError::InvalidT);
    }
    let rows: Vec<FixedBitSet> = (0..g.n()).map(|v| g.adjacency(v).clone()).collect();
    Ok(match biclique_search(&rows, g.n(), t, budget) {
        Biclique::Found(a, b) => KttSearch::Found(KttWitness { a, b }),
        Biclique::None => KttSearch::Free,
        Biclique::OutOfBudget => KttSearch::Inconclusive,
    })
}
