//! Vertex-indexed simple graphs with a linear or cyclic vertex order.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::Deref;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Unordered vertex pair, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub lo: usize,
    pub hi: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loops are not edges");
        Edge { lo: a.min(b), hi: a.max(b) }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("the two query vertices coincide ({0})")]
    SameVertex(usize),
    #[error("t must be at least 1")]
    InvalidT,
}

/// Loop-free graph on `0..n` with deduplicated edges and adjacency bitsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: BTreeSet::new(), adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect() }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            let (a, b) = e.into();
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool, GraphError> {
        for v in [a, b] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::Loop(a));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(self.edges.insert(Edge::new(a, b)))
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        if a == b || a >= self.n || b >= self.n {
            return false;
        }
        self.adj[a].set(b, false);
        self.adj[b].set(a, false);
        self.edges.remove(&Edge::new(a, b))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].contains(b)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// Neighbours of `v` in increasing index order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Graph on `vertices.len()` vertices where vertex `i` stands for
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.add_edge(i, j).expect("indices in range");
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.add_edge(perm[e.lo], perm[e.hi]).expect("permutation");
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }
}

/// Whether `e1` and `e2` cross as chords of the vertex order, i.e. their
/// endpoints interleave `a < c < b < d`. Edges sharing an endpoint never
/// cross. The relation is the same for linear and cyclic orders.
pub fn edges_cross(e1: Edge, e2: Edge) -> bool {
    let (a, b, c, d) = (e1.lo, e1.hi, e2.lo, e2.hi);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Graph whose vertex order is the index order `0 < 1 < ... < n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph(Graph);

/// Graph whose vertices are ordered cyclically `0, 1, ..., n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicGraph(Graph);

impl OrderedGraph {
    pub fn new(graph: Graph) -> Self {
        OrderedGraph(graph)
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        Graph::from_edges(n, edges).map(OrderedGraph)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn graph_mut(&mut self) -> &mut Graph {
        &mut self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// The same graph read cyclically.
    pub fn to_cyclic(&self) -> CyclicGraph {
        CyclicGraph(self.0.clone())
    }
}

impl CyclicGraph {
    pub fn new(graph: Graph) -> Self {
        CyclicGraph(graph)
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        Graph::from_edges(n, edges).map(CyclicGraph)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }
}

impl Deref for OrderedGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl Deref for CyclicGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

/// Common view of ordered and cyclically ordered graphs.
pub trait VertexOrder {
    fn graph(&self) -> &Graph;
    fn is_cyclic(&self) -> bool;
}

impl VertexOrder for OrderedGraph {
    fn graph(&self) -> &Graph {
        &self.0
    }
    fn is_cyclic(&self) -> bool {
        false
    }
}

impl VertexOrder for CyclicGraph {
    fn graph(&self) -> &Graph {
        &self.0
    }
    fn is_cyclic(&self) -> bool {
        true
    }
}

/// `G_v`: the linear order obtained by making `v` the smallest vertex.
/// Vertex `v + i (mod n)` becomes vertex `i`.
pub fn rotate_to_order(g: &CyclicGraph, v: usize) -> Result<OrderedGraph, GraphError> {
    let n = g.n();
    if v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: v, n });
    }
    let perm: Vec<usize> = (0..n).map(|w| (w + n - v) % n).collect();
    Ok(OrderedGraph(g.relabeled(&perm)))
}
