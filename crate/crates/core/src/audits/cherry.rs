use crate::geometry::Polygon;
use crate::graph::CyclicGraph;
use crate::ordered::{exists_crossing_sequence, is_double_cherry, max_pairwise_crossing, CrossingRule};
use crate::visibility::{site_visibility_graph, vertex_visibility_graph, BoundarySite};

use super::{AuditError, AuditReport, TheoremId, Violation, Witness};

/// Every non-adjacent pair of the visibility graph must be neither a double
/// cherry nor joined by forward crossing sequences in both directions.
/// Pairs joined both ways by chains that may step backwards are only
/// counted, since such chains do not force visibility.
pub fn audit_double_cherry(polygon: &Polygon, sites: Option<&[BoundarySite]>) -> Result<AuditReport, AuditError> {
    let g = match sites {
        Some(s) => site_visibility_graph(polygon, s)?,
        None => vertex_visibility_graph(polygon),
    };
    let n = g.n();
    let mut report = AuditReport::new(TheoremId::DoubleCherry, n);
    let mut checked = 0usize;
    // Non-adjacent pairs linked both ways when chains may step backwards.
    let mut unordered_chains = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            checked += 1;
            if is_double_cherry(&g, u, v).expect("distinct vertices in range") {
                report.violations.push(Violation::NonAdjacentDoubleCherry { u, v });
            }
            let both = |rule| {
                exists_crossing_sequence(&g, u, v, rule).expect("in range")
                    && exists_crossing_sequence(&g, v, u, rule).expect("in range")
            };
            if both(CrossingRule::Forward) {
                report.violations.push(Violation::NonAdjacentCrossingSequences { u, v });
            }
            if both(CrossingRule::AnyCrossing) {
                unordered_chains += 1;
            }
        }
    }
    report.count("edges", g.edge_count());
    report.count("non_adjacent_pairs", checked);
    report.count("unordered_chain_pairs", unordered_chains);
    if checked == 0 {
        report.note("complete graph");
    }
    Ok(report.finish(false))
}

/// `2kn - k(2k + 1)` when `1 <= k` and `2k + 1 <= n`, the range in which the
/// bound is stated.
pub fn capoyleas_pach_bound(n: usize, k: usize) -> Option<usize> {
    (k >= 1 && 2 * k < n).then(|| 2 * k * n - k * (2 * k + 1))
}

/// With `k` the maximum number of pairwise crossing edges, a cyclic graph has
/// at most `2kn - k(2k + 1)` edges.
pub fn capoyleas_pach_audit(g: &CyclicGraph) -> AuditReport {
    let n = g.n();
    let fam = max_pairwise_crossing(g);
    let k = fam.size;
    let mut report = AuditReport::new(TheoremId::CapoyleasPach, n);
    report.count("edges", g.edge_count());
    report.count("maxcross", k);
    match capoyleas_pach_bound(n, k) {
        Some(bound) => {
            report.count("bound", bound);
            report.count("slack", bound as i64 - g.edge_count() as i64);
            if g.edge_count() > bound {
                report.violations.push(Violation::CapoyleasPach { k, edges: g.edge_count(), bound });
            }
        }
        None => report.note("bound not applicable for this k and n"),
    }
    if k > 0 {
        report.witnesses.push(Witness::CrossingFamily(fam.edges));
    }
    report.finish(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audits::Verdict;
    use crate::generators::{convex_polygon, fan_polygon};
    use crate::graph::Graph;

    #[test]
    fn cp_examples() {
        let k5 = CyclicGraph::new(Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap());
        let r = capoyleas_pach_audit(&k5);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.counter("bound"), Some(10));
        assert_eq!(r.counter("slack"), Some(0));

        let c7 = CyclicGraph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        let r = capoyleas_pach_audit(&c7);
        assert_eq!(r.counter("maxcross"), Some(1));
        assert_eq!(r.counter("bound"), Some(11));
        assert!(r.passed());
    }

    #[test]
    fn double_cherry_examples() {
        let r = audit_double_cherry(&convex_polygon(7).unwrap(), None).unwrap();
        assert!(r.passed());
        assert_eq!(r.counter("non_adjacent_pairs"), Some(0));
        let r = audit_double_cherry(&fan_polygon(8).unwrap(), None).unwrap();
        assert!(r.passed());
        assert!(r.violations.is_empty());
    }
}
