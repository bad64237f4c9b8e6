use alloc::vec::Vec;

use num_traits::One;

use crate::budget::Budget;
use crate::geometry::{polygon_kernel, Point, Polygon, Rational};
use crate::graph::{edges_cross, Edge, Graph};
use crate::ordered::{find_complete_bipartite, max_pairwise_crossing, KttSearch, KttWitness};
use crate::visibility::{points_visibility_graph, resolve_sites, vertex_sites, BoundarySite};

use super::{AuditError, AuditOptions, AuditReport, TheoremId, Verifier, Violation, Witness};

/// Slope strictly above every slope from `p` to a point, so the line through
/// `p` with this slope avoids all points other than `p`.
fn avoiding_slope(p: &Point, pts: &[Point]) -> Rational {
    let max = pts
        .iter()
        .filter(|q| q.x != p.x)
        .map(|q| (&q.y - &p.y) / (&q.x - &p.x))
        .max()
        .unwrap_or_else(|| Rational::from_integer(0.into()));
    max + Rational::one()
}

/// Maximal run of `above` indices in cyclic order, starting at one whose
/// predecessor is not above.
fn clockwise_run(above: &[bool]) -> Vec<usize> {
    let m = above.len();
    let start = (0..m).find(|&i| above[i] && !above[(i + m - 1) % m]).unwrap_or(0);
    (0..m).map(|k| (start + k) % m).filter(|&i| above[i]).collect()
}

/// Splits the sites by a line through a kernel point and checks, in each
/// half (ordered clockwise from the line): (i) crossing edges `(a, b)`,
/// `(c, d)` with `a < c < b < d` force the edge `(a, d)`; (ii) `2t` pairwise
/// crossing edges force a `K_{t,t}` on `{a_1..a_t} x {b_{t+1}..b_{2t}}`, so
/// a `K_{t,t}`-free graph has at most `2t - 1` of them.
pub fn star_theorem_audit(
    polygon: &Polygon,
    sites: Option<&[BoundarySite]>,
    t: usize,
    opts: &AuditOptions,
) -> Result<AuditReport, AuditError> {
    if t == 0 {
        return Err(AuditError::InvalidT);
    }
    let kernel = polygon_kernel(polygon).ok_or(AuditError::NotStarShaped)?;
    let sites = sites.map(<[BoundarySite]>::to_vec).unwrap_or_else(|| vertex_sites(polygon));
    let pts = resolve_sites(polygon, &sites)?;
    let g = points_visibility_graph(polygon, &pts);
    let m = pts.len();
    let mut report = AuditReport::new(TheoremId::StarShaped, m);
    let mut verifier = Verifier::new(polygon, &pts);
    report.instance.t = Some(t);

    let p = kernel.centroid();
    let slope = avoiding_slope(&p, &pts);
    let line_y = |q: &Point| &p.y + &slope * (&q.x - &p.x);
    let above: Vec<bool> = pts.iter().map(|q| q.y > line_y(q)).collect();
    let below: Vec<bool> = pts.iter().map(|q| q.y < line_y(q)).collect();
    let halves = [clockwise_run(&above), clockwise_run(&below)];
    let cross_line = g.edges().filter(|e| (above[e.lo] && below[e.hi]) || (below[e.lo] && above[e.hi])).count();
    report.count("edges", g.edge_count());
    report.count("cross_line_edges", cross_line);
    report.count("half_sizes_above", halves[0].len());
    report.count("half_sizes_below", halves[1].len());

    let ktt = find_complete_bipartite(&g, t, &mut Budget::new(opts.node_budget)).expect("t >= 1");
    let mut crossing_pairs = 0usize;
    let mut inconclusive = false;
    for half in &halves {
        let h: Graph = g.induced(half);
        let to_site = |e: Edge| Edge::new(half[e.lo], half[e.hi]);
        // (i): positions in the half are the clockwise order.
        let edges: Vec<Edge> = h.edges().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if !edges_cross(e, f) {
                    continue;
                }
                crossing_pairs += 1;
                let (ab, cd) = if e.lo < f.lo { (e, f) } else { (f, e) };
                if !h.has_edge(ab.lo, cd.hi) {
                    report.violations.push(Violation::StarMissingEdge { ab: to_site(ab), cd: to_site(cd) });
                }
            }
        }
        // (ii)
        let fam = max_pairwise_crossing(&h);
        if fam.size >= 2 * t {
            let mut es = fam.edges.clone();
            es.sort();
            let a: Vec<usize> = es[..t].iter().map(|e| half[e.lo]).collect();
            let b: Vec<usize> = es[t..2 * t].iter().map(|e| half[e.hi]).collect();
            match verifier.ktt(&a, &b) {
                Ok(()) => report.witnesses.push(Witness::Ktt(KttWitness { a, b })),
                Err(v) => report.violations.push(v),
            }
            match &ktt {
                KttSearch::Free => report
                    .violations
                    .push(Violation::StarTooManyCrossings { family: fam.edges.iter().map(|&e| to_site(e)).collect() }),
                KttSearch::Inconclusive => inconclusive = true,
                KttSearch::Found(_) => {}
            }
        }
        report.count("half_maxcross", fam.size);
    }
    report.count("crossing_pairs", crossing_pairs);
    match ktt {
        KttSearch::Found(_) => report.note("graph contains K_{t,t}; crossing bound not applicable"),
        KttSearch::Inconclusive => report.note("K_{t,t} search inconclusive"),
        KttSearch::Free => {}
    }
    Ok(report.finish(inconclusive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audits::Verdict;
    use crate::generators::{convex_polygon, star_polygon};
    use crate::geometry::{rat, validate_polygon};

    #[test]
    fn convex_passes() {
        let r = star_theorem_audit(&convex_polygon(8).unwrap(), None, 2, &AuditOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn star_passes() {
        let r = star_theorem_audit(&star_polygon(12, 4).unwrap(), None, 2, &AuditOptions::default()).unwrap();
        assert!(r.violations.is_empty());
        let sites = [BoundarySite::vertex(0), BoundarySite::new(0, rat(1, 2)), BoundarySite::vertex(5)];
        let r = star_theorem_audit(&star_polygon(12, 4).unwrap(), Some(&sites), 1, &AuditOptions::default()).unwrap();
        assert!(r.violations.is_empty());
    }

    #[test]
    fn not_star_shaped() {
        // Two long horizontal prongs joined by a thin vertical bar.
        let pts = [(0, 0), (0, 1), (9, 1), (9, 2), (0, 2), (0, 3), (10, 3), (10, 0)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        let spiral = validate_polygon(pts).unwrap();
        let r = star_theorem_audit(&spiral, None, 2, &AuditOptions::default());
        assert_eq!(r, Err(AuditError::NotStarShaped));
    }
}
