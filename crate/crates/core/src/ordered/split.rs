use alloc::vec::Vec;

use crate::graph::{Edge, Graph, OrderedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Keeps only edges to later vertices.
    Left,
    /// Keeps only edges to earlier vertices.
    Right,
}

/// Ordered bipartite subgraph: every kept edge joins a `Left` vertex to a
/// later `Right` vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSplit {
    pub sides: Vec<Side>,
    pub kept: Vec<Edge>,
}

impl BipartiteSplit {
    pub fn left(&self) -> Vec<usize> {
        self.members(Side::Left)
    }

    pub fn right(&self) -> Vec<usize> {
        self.members(Side::Right)
    }

    fn members(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&v| self.sides[v] == side).collect()
    }

    /// The kept subgraph on all original vertices.
    pub fn kept_graph(&self) -> OrderedGraph {
        OrderedGraph::from_edges(self.sides.len(), self.kept.iter().map(|e| (e.lo, e.hi)))
            .expect("kept edges come from a valid graph")
    }

    /// Structural check of the split against its source graph: kept edges are
    /// edges of `g`, go from `Left` to a later `Right` vertex, and number at
    /// least a quarter of `|E(g)|`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.sides.len() == g.n()
            && self
                .kept
                .iter()
                .all(|e| g.has_edge(e.lo, e.hi) && self.sides[e.lo] == Side::Left && self.sides[e.hi] == Side::Right)
            && 4 * self.kept.len() >= g.edge_count()
    }
}

/// Derandomized left/right split keeping at least `ceil(|E|/4)` edges.
///
/// Vertices are fixed in order, each to the side maximizing the conditional
/// expectation of the kept-edge count when the remaining vertices are still
/// fair coin flips. Assigning `v` to `Left` gains `later/2` in expectation,
/// assigning it to `Right` gains the number of earlier `Left` neighbours.
pub fn bipartite_split(g: &OrderedGraph) -> BipartiteSplit {
    let n = g.n();
    let mut sides = Vec::with_capacity(n);
    for v in 0..n {
        let mut later = 0usize;
        let mut earlier_left = 0usize;
        for w in g.neighbors(v) {
            if w > v {
                later += 1;
            } else if sides[w] == Side::Left {
                earlier_left += 1;
            }
        }
        sides.push(if later >= 2 * earlier_left { Side::Left } else { Side::Right });
    }
    let kept = g.edges().filter(|e| sides[e.lo] == Side::Left && sides[e.hi] == Side::Right).collect();
    BipartiteSplit { sides, kept }
}
