use alloc::vec::Vec;

use num_traits::Zero;

use crate::geometry::{monotone_chains, Polygon};
use crate::graph::OrderedGraph;
use crate::matrix::{adjacency_matrix, build_pattern, enumerate_occurrences, PatternKind};
use crate::ordered::{bipartite_split, KttWitness};
use crate::visibility::{points_visibility_graph, resolve_sites, vertex_sites, BoundarySite};

use super::{AuditError, AuditOptions, AuditReport, TheoremId, Verifier, Witness};

/// For each boundary chain, read left to right and right to left, the
/// adjacency matrix of the bipartite split of the chain's ordered subgraph
/// is searched for `((I_{2t}^+)^T)^+`. Each occurrence with rows
/// `l_0..l_{2t+1}` and columns `r_0..r_{2t+1}` must give the `K_{t,t}`
/// `{l_1..l_t} x {r_{t+1}..r_{2t}}` in the full visibility graph.
pub fn monotone_theorem_audit(
    polygon: &Polygon,
    sites: Option<&[BoundarySite]>,
    t: usize,
    opts: &AuditOptions,
) -> Result<AuditReport, AuditError> {
    if t == 0 {
        return Err(AuditError::InvalidT);
    }
    let chains = monotone_chains(polygon)?.ok_or(AuditError::NotMonotone)?;
    let n = polygon.len();
    let mut sites = sites.map(<[BoundarySite]>::to_vec).unwrap_or_else(|| vertex_sites(polygon));
    sites.sort();
    let pts = resolve_sites(polygon, &sites)?;
    let g = points_visibility_graph(polygon, &pts);
    let mut report = AuditReport::new(TheoremId::XMonotone, pts.len());
    let mut verifier = Verifier::new(polygon, &pts);
    report.instance.t = Some(t);
    report.count("edges", g.edge_count());

    // Edge i runs from vertex i to vertex i + 1; the upper chain consists of
    // the edges leaving its vertices other than the rightmost.
    let right = *chains.upper.last().expect("chains are nonempty");
    let mut on_upper_edge = alloc::vec![false; n];
    for &v in &chains.upper {
        if v != right {
            on_upper_edge[v] = true;
        }
    }
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (i, s) in sites.iter().enumerate() {
        let at_vertex = s.t.is_zero();
        let v = s.edge_index;
        let in_upper = if at_vertex { chains.upper.contains(&v) } else { on_upper_edge[v] };
        let in_lower = if at_vertex { chains.lower.contains(&v) } else { !on_upper_edge[v] };
        if in_upper {
            upper.push(i);
        }
        if in_lower {
            lower.push(i);
        }
    }
    for chain in [&mut upper, &mut lower] {
        chain.sort_by(|&a, &b| pts[a].x.cmp(&pts[b].x));
    }
    report.count("upper_sites", upper.len());
    report.count("lower_sites", lower.len());

    let pattern = build_pattern(PatternKind::MonotoneMt(t)).expect("t >= 1");
    let mut total = 0usize;
    let mut capped = false;
    for chain in [&upper, &lower] {
        for reverse in [false, true] {
            let order: Vec<usize> = if reverse { chain.iter().rev().copied().collect() } else { chain.to_vec() };
            let h = OrderedGraph::new(g.induced(&order));
            let split = bipartite_split(&h);
            let (left, right) = (split.left(), split.right());
            let a = adjacency_matrix(split.kept_graph().graph(), &left, &right);
            let occ = enumerate_occurrences(&a, &pattern, opts.occurrence_cap);
            total += occ.found.len();
            capped |= occ.capped;
            for o in occ.found {
                let ls: Vec<usize> = o.rows[1..=t].iter().map(|&i| order[left[i]]).collect();
                let rs: Vec<usize> = o.cols[t + 1..=2 * t].iter().map(|&j| order[right[j]]).collect();
                match verifier.ktt(&ls, &rs) {
                    Ok(()) => report.witnesses.push(Witness::Ktt(KttWitness { a: ls, b: rs })),
                    Err(v) => report.violations.push(v),
                }
            }
        }
    }
    report.count("occurrences", total);
    report.count("capped", capped as i64);
    if capped {
        report.note("occurrence enumeration capped");
    }
    Ok(report.finish(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audits::Verdict;
    use crate::generators::{convex_polygon, fan_polygon, star_polygon, xmonotone_polygon};

    #[test]
    fn fan_has_no_occurrence() {
        let r = monotone_theorem_audit(&fan_polygon(8).unwrap(), None, 2, &AuditOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.counter("occurrences"), Some(0));
    }

    #[test]
    fn convex_occurrences_verify() {
        let r = monotone_theorem_audit(&convex_polygon(24).unwrap(), None, 1, &AuditOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.counter("occurrences").unwrap() > 0);
    }

    #[test]
    fn xmonotone_passes() {
        let r = monotone_theorem_audit(&xmonotone_polygon(16, 3).unwrap(), None, 2, &AuditOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.counter("upper_sites").unwrap() + r.counter("lower_sites").unwrap(), 18);
    }

    #[test]
    fn star_may_not_be_monotone() {
        let p = star_polygon(20, 11).unwrap();
        match monotone_theorem_audit(&p, None, 2, &AuditOptions::default()) {
            Ok(r) => assert!(r.violations.is_empty()),
            Err(e) => assert!(matches!(e, AuditError::NotMonotone | AuditError::Geometry(_))),
        }
    }
}
