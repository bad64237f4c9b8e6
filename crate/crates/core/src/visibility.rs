//! Visibility graphs of polygon vertices and of point sets on the boundary.

use alloc::vec::Vec;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::geometry::{segment_avoids_exterior, Point, Polygon, Rational};
use crate::graph::{CyclicGraph, Graph};
use crate::predicates::BoundaryVisibility;

/// The point `vertices[edge_index] + t * (vertices[edge_index + 1] - vertices[edge_index])`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundarySite {
    pub edge_index: usize,
    pub t: Rational,
}

impl BoundarySite {
    pub fn new(edge_index: usize, t: Rational) -> Self {
        BoundarySite { edge_index, t }
    }

    pub fn vertex(i: usize) -> Self {
        BoundarySite::new(i, Rational::from_integer(0.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SiteError {
    #[error("site {index} repeats an earlier site")]
    DuplicateSite { index: usize },
    #[error("edge index {edge_index} out of range for a polygon with {n} edges")]
    EdgeIndexOutOfRange { edge_index: usize, n: usize },
    #[error("site {index} has parameter {t} outside [0, 1)")]
    ParameterOutOfRange { index: usize, t: Rational },
}

/// Resolves boundary sites to exact points, sorted in clockwise boundary
/// order starting from vertex 0.
pub fn resolve_sites(polygon: &Polygon, sites: &[BoundarySite]) -> Result<Vec<Point>, SiteError> {
    let n = polygon.len();
    for (index, s) in sites.iter().enumerate() {
        if s.edge_index >= n {
            return Err(SiteError::EdgeIndexOutOfRange { edge_index: s.edge_index, n });
        }
        if s.t.is_negative() || s.t >= Rational::one() {
            return Err(SiteError::ParameterOutOfRange { index, t: s.t.clone() });
        }
    }
    let mut order: Vec<usize> = (0..sites.len()).collect();
    order.sort_by(|&i, &j| sites[i].cmp(&sites[j]).then(i.cmp(&j)));
    for w in order.windows(2) {
        if sites[w[0]] == sites[w[1]] {
            return Err(SiteError::DuplicateSite { index: w[1] });
        }
    }
    Ok(order
        .into_iter()
        .map(|i| {
            let e = polygon.edge(sites[i].edge_index);
            e.a.lerp(&e.b, &sites[i].t)
        })
        .collect())
}

/// Visibility graph of points of the closed polygon: `i ~ j` iff the segment
/// between them avoids the exterior. Points must not lie outside.
pub fn points_visibility_graph(polygon: &Polygon, points: &[Point]) -> Graph {
    let m = points.len();
    let fast = BoundaryVisibility::new(polygon, points);
    let mut g = Graph::empty(m);
    for i in 0..m {
        for j in i + 1..m {
            let sees = fast.sees(fast.point_index(i), fast.point_index(j)).unwrap_or_else(|| {
                segment_avoids_exterior(polygon, &points[i], &points[j]).expect("points lie in the closed polygon")
            });
            if sees {
                g.add_edge(i, j).expect("indices in range");
            }
        }
    }
    g
}

/// Visibility graph of the polygon's vertices in clockwise order.
pub fn vertex_visibility_graph(polygon: &Polygon) -> CyclicGraph {
    let n = polygon.len();
    let fast = BoundaryVisibility::new(polygon, &[]);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let boundary_edge = j == i + 1 || (i == 0 && j == n - 1);
            let sees = boundary_edge || fast.sees(i, j).expect("vertices lie on P");
            if sees {
                g.add_edge(i, j).expect("indices in range");
            }
        }
    }
    CyclicGraph::new(g)
}

/// Visibility graph of boundary sites; vertex `i` is the `i`-th site in
/// clockwise order (see [`resolve_sites`]).
pub fn site_visibility_graph(polygon: &Polygon, sites: &[BoundarySite]) -> Result<CyclicGraph, SiteError> {
    let points = resolve_sites(polygon, sites)?;
    Ok(CyclicGraph::new(points_visibility_graph(polygon, &points)))
}

/// One site at every vertex.
pub fn vertex_sites(polygon: &Polygon) -> Vec<BoundarySite> {
    (0..polygon.len()).map(BoundarySite::vertex).collect()
}
