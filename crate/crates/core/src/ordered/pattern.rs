use alloc::vec::Vec;

use crate::graph::OrderedGraph;

/// Ordered pattern on vertices `0 < 1 < ... < k-1`.
pub type PatternGraph = OrderedGraph;

/// `a < b < c` with edges `(a,b)` and `(b,c)`.
pub fn h0() -> PatternGraph {
    OrderedGraph::from_edges(3, [(0, 1), (1, 2)]).expect("valid constant")
}

/// `a < b < c < d < e` with edges `(a,e)`, `(b,d)` and `(c,e)`.
pub fn h1() -> PatternGraph {
    OrderedGraph::from_edges(5, [(0, 4), (1, 3), (2, 4)]).expect("valid constant")
}

/// Finds an order-preserving injective map of the pattern's vertices into
/// `g` under which every pattern edge lands on an edge of `g`. Returns the
/// lexicographically smallest image, or `None` if `g` avoids the pattern.
pub fn find_ordered_pattern(g: &OrderedGraph, pat: &PatternGraph) -> Option<Vec<usize>> {
    let k = pat.n();
    let n = g.n();
    if k > n {
        return None;
    }
    let earlier: Vec<Vec<usize>> = (0..k).map(|i| pat.neighbors(i).filter(|&p| p < i).collect()).collect();
    let later_count: Vec<usize> = (0..k).map(|i| pat.neighbors(i).filter(|&p| p > i).count()).collect();
    // Neighbours of each graph vertex that come after it.
    let later_deg: Vec<usize> = (0..n).map(|w| g.neighbors(w).filter(|&x| x > w).count()).collect();
    let mut image = Vec::with_capacity(k);
    if place(g, &earlier, &later_count, &later_deg, k, &mut image) {
        Some(image)
    } else {
        None
    }
}

fn place(
    g: &OrderedGraph,
    earlier: &[Vec<usize>],
    later_count: &[usize],
    later_deg: &[usize],
    k: usize,
    image: &mut Vec<usize>,
) -> bool {
    let i = image.len();
    if i == k {
        return true;
    }
    let n = g.n();
    let start = image.last().map_or(0, |&w| w + 1);
    for w in start..=(n - (k - i)) {
        if later_deg[w] < later_count[i] {
            continue;
        }
        if earlier[i].iter().all(|&p| g.has_edge(image[p], w)) {
            image.push(w);
            if place(g, earlier, later_count, later_deg, k, image) {
                return true;
            }
            image.pop();
        }
    }
    false
}
