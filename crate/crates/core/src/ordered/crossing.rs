use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, Graph};

/// A largest family of pairwise crossing edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingFamily {
    pub size: usize,
    /// Sorted so that the smaller endpoints, read from the first edge's smaller
    /// endpoint cyclically, come in increasing order.
    pub edges: Vec<Edge>,
}

/// Exact maximum number of pairwise crossing edges (the clique number of the
/// crossing relation). Crossing is interleaving, so the answer is the same
/// for the linear and the cyclic reading of the vertex order.
///
/// Any `k` pairwise crossing chords have endpoints `a1 < ... < ak < b1 < ...
/// < bk` after rotating to `a1`. Fixing the first chord `(a1, b1)`, the rest
/// is a longest chain strictly increasing in both endpoints among chords with
/// one end in `(a1, b1)` and the other in `(b1, a1)`, which a patience-sort
/// longest increasing subsequence finds in `O(m log m)`.
pub fn max_pairwise_crossing(g: &Graph) -> CrossingFamily {
    let n = g.n();
    let edges: Vec<Edge> = g.edges().collect();
    let mut best = CrossingFamily { size: 0, edges: Vec::new() };
    for x in 0..n {
        for y in g.neighbors(x) {
            let pos = |w: usize| (w + n - x) % n;
            let py = pos(y);
            let mut cands: Vec<(usize, usize, Edge)> = edges
                .iter()
                .filter_map(|&e| {
                    let (p, q) = (pos(e.lo), pos(e.hi));
                    let (p, q) = (p.min(q), p.max(q));
                    (0 < p && p < py && py < q).then_some((p, q, e))
                })
                .collect();
            if cands.len() < best.size {
                continue;
            }
            cands.sort_by(|l, r| l.0.cmp(&r.0).then(r.1.cmp(&l.1)));
            let chain = longest_increasing_by_second(&cands);
            if chain.len() + 1 > best.size {
                let mut fam = vec![Edge::new(x, y)];
                fam.extend(chain.iter().map(|&i| cands[i].2));
                best = CrossingFamily { size: fam.len(), edges: fam };
            }
        }
    }
    best
}

/// Indices of a longest subsequence strictly increasing in `.1`.
fn longest_increasing_by_second(items: &[(usize, usize, Edge)]) -> Vec<usize> {
    // tails[k]: index of the smallest tail of an increasing run of length k+1.
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; items.len()];
    for i in 0..items.len() {
        let key = items[i].1;
        let k = tails.partition_point(|&j| items[j].1 < key);
        prev[i] = if k > 0 { Some(tails[k - 1]) } else { None };
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = prev[i];
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edges_cross;

    fn pairwise_crossing(es: &[Edge]) -> bool {
        es.iter().enumerate().all(|(i, &a)| es[i + 1..].iter().all(|&b| edges_cross(a, b)))
    }

    #[test]
    fn examples() {
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(max_pairwise_crossing(&g).size, 2);

        let k5 = Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        let f = max_pairwise_crossing(&k5);
        assert_eq!(f.size, 2);
        assert!(pairwise_crossing(&f.edges));

        let fan = Graph::from_edges(8, [(0, 5), (1, 6), (2, 7)]).unwrap();
        let f = max_pairwise_crossing(&fan);
        assert_eq!(f.size, 3);
        assert!(pairwise_crossing(&f.edges));

        assert_eq!(max_pairwise_crossing(&Graph::empty(4)).size, 0);
        let c = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(max_pairwise_crossing(&c).size, 1);
    }
}
