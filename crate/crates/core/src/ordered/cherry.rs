use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{GraphError, VertexOrder};

fn check_pair(n: usize, u: usize, v: usize) -> Result<(), GraphError> {
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    Ok(())
}

/// Whether `u` and `v` form a double cherry: they are adjacent, or there are
/// edges `(u,v1),(u,v2),(v,u1),(v,u2)` with `u1 < u < u2 < v1 < v < v2`.
///
/// For an ordered graph the pair is taken with `u < v`. For a cyclic graph
/// the six vertices must appear in that cyclic order; read in `G_u` this is
/// `u < u2 < v1 < v < v2 < u1`.
pub fn is_double_cherry<G: VertexOrder>(g: &G, u: usize, v: usize) -> Result<bool, GraphError> {
    let graph = g.graph();
    let n = graph.n();
    check_pair(n, u, v)?;
    if graph.has_edge(u, v) {
        return Ok(true);
    }
    let (u, v) = if g.is_cyclic() { (u, v) } else { (u.min(v), u.max(v)) };
    let base = if g.is_cyclic() { u } else { 0 };
    let pos = |w: usize| (w + n - base) % n;
    let (pu, pv) = (pos(u), pos(v));

    // Some neighbour of v followed by some neighbour of u, both strictly
    // inside the position window (lo, hi).
    let interleaved = |lo: usize, hi: usize| -> bool {
        let first_v = graph.neighbors(v).map(pos).filter(|&p| lo < p && p < hi).min();
        match first_v {
            Some(a) => graph.neighbors(u).map(pos).any(|p| a < p && p < hi),
            None => false,
        }
    };

    if g.is_cyclic() {
        // Window after u: u2 then v1; window after v: v2 then u1.
        Ok(interleaved(pu, pv) && {
            let first_u = graph.neighbors(u).map(pos).filter(|&p| p > pv).min();
            match first_u {
                Some(a) => graph.neighbors(v).map(pos).any(|p| p > a),
                None => false,
            }
        })
    } else {
        let u1 = graph.neighbors(v).any(|w| w < u);
        let v2 = graph.neighbors(u).any(|w| w > v);
        Ok(u1 && v2 && interleaved(pu, pv))
    }
}

/// How consecutive edges of a crossing sequence must relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingRule {
    /// Each edge `(a, b)` is followed by an edge `(c, d)` with
    /// `a < c < b < d`, so the chain advances from `u` towards `v`.
    Forward,
    /// Consecutive edges merely cross, in either direction.
    AnyCrossing,
}

/// Whether there is a crossing sequence from `u` to `v`: edges
/// `e1, ..., ek` with `u` the smaller endpoint of `e1`, `v` the greater
/// endpoint of `ek` and consecutive edges related by `rule`. For a cyclic
/// graph the endpoints are compared in `G_u`. Breadth-first search over edges.
pub fn exists_crossing_sequence<G: VertexOrder>(
    g: &G,
    u: usize,
    v: usize,
    rule: CrossingRule,
) -> Result<bool, GraphError> {
    let graph = g.graph();
    let n = graph.n();
    check_pair(n, u, v)?;
    let base = if g.is_cyclic() { u } else { 0 };
    let pos = |w: usize| (w + n - base) % n;
    // Edges as position pairs `(smaller, greater)` in the order seen from `u`.
    let edges: Vec<(usize, usize)> = graph
        .edges()
        .map(|e| {
            let (a, b) = (pos(e.lo), pos(e.hi));
            (a.min(b), a.max(b))
        })
        .collect();
    let (pu, pv) = (pos(u), pos(v));
    let follows = |(a, b): (usize, usize), (c, d): (usize, usize)| match rule {
        CrossingRule::Forward => a < c && c < b && b < d,
        CrossingRule::AnyCrossing => (a < c && c < b && b < d) || (c < a && a < d && d < b),
    };
    let mut seen = vec![false; edges.len()];
    let mut queue = VecDeque::new();
    for (i, e) in edges.iter().enumerate() {
        if e.0 == pu {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        if edges[i].1 == pv {
            return Ok(true);
        }
        for j in 0..edges.len() {
            if !seen[j] && follows(edges[i], edges[j]) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OrderedGraph;

    #[test]
    fn double_cherry_examples() {
        let g = OrderedGraph::from_edges(6, [(1, 3), (1, 5), (4, 0), (4, 2)]).unwrap();
        assert!(is_double_cherry(&g, 1, 4).unwrap());
        assert!(is_double_cherry(&g, 4, 1).unwrap());
        let g2 = OrderedGraph::from_edges(6, [(1, 3), (4, 0), (4, 2)]).unwrap();
        assert!(!is_double_cherry(&g2, 1, 4).unwrap());
        let adj = OrderedGraph::from_edges(2, [(0, 1)]).unwrap();
        assert!(is_double_cherry(&adj, 0, 1).unwrap());
        assert_eq!(is_double_cherry(&adj, 1, 1), Err(GraphError::SameVertex(1)));
    }

    #[test]
    fn cyclic_double_cherry_uses_the_cyclic_order() {
        // Rotating the ordered example by two keeps the cyclic pattern.
        let g = OrderedGraph::from_edges(6, [(3, 5), (3, 1), (0, 2), (0, 4)]).unwrap();
        assert!(!is_double_cherry(&g, 3, 0).unwrap());
        assert!(is_double_cherry(&g.to_cyclic(), 3, 0).unwrap());
        assert!(is_double_cherry(&g.to_cyclic(), 0, 3).unwrap());
    }

    #[test]
    fn crossing_sequence_examples() {
        let g = OrderedGraph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert!(exists_crossing_sequence(&g, 0, 3, CrossingRule::Forward).unwrap());
        let g = OrderedGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!exists_crossing_sequence(&g, 0, 3, CrossingRule::Forward).unwrap());
        let g = OrderedGraph::from_edges(6, [(0, 2), (1, 4), (3, 5)]).unwrap();
        assert!(exists_crossing_sequence(&g, 0, 5, CrossingRule::Forward).unwrap());
        // The chain may not step backwards under the forward rule.
        let g = OrderedGraph::from_edges(6, [(0, 4), (3, 5), (2, 4), (1, 3)]).unwrap();
        assert!(!exists_crossing_sequence(&g, 0, 3, CrossingRule::Forward).unwrap());
        assert!(exists_crossing_sequence(&g, 0, 3, CrossingRule::AnyCrossing).unwrap());
        // Without the middle edge the chain breaks.
        let g = OrderedGraph::from_edges(6, [(0, 2), (3, 5)]).unwrap();
        assert!(!exists_crossing_sequence(&g, 0, 5, CrossingRule::Forward).unwrap());
    }
}
