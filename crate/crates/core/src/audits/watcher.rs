use alloc::vec::Vec;

use crate::budget::Budget;
use crate::geometry::{validate_polygon, Point, Polygon};
use crate::graph::{Edge, Graph, OrderedGraph};
use crate::matrix::{adjacency_matrix, build_pattern, enumerate_occurrences, PatternKind};
use crate::ordered::{bipartite_split, find_complete_bipartite, KttSearch, KttWitness};
use crate::predicates::BoundaryVisibility;
use crate::visibility::vertex_visibility_graph;

use super::{AuditError, AuditOptions, AuditReport, TheoremId, Verifier, Violation, Witness};

/// Whether `seq` is strictly increasing after some rotation, i.e. appears in
/// this cyclic order.
fn cyclically_increasing(seq: &[usize]) -> bool {
    let k = seq.len();
    let descents = (0..k).filter(|&i| seq[i] >= seq[(i + 1) % k]).count();
    k < 2 || descents == 1
}

/// Given vertices `r_1..r_k, c_1..c_2k` in clockwise order with `r_i`
/// seeing `c_i` and `c_{i+k}`, scans the clockwise range from `c_k` to
/// `c_{k+1}` for a vertex that sees every `r_j`. `Ok(None)` means no such
/// vertex exists.
pub fn find_common_watcher(polygon: &Polygon, r: &[usize], c: &[usize]) -> Result<Option<usize>, AuditError> {
    let vis = BoundaryVisibility::new(polygon, &[]);
    common_watcher_with(polygon.len(), r, c, |a, b| a == b || vis.sees(a, b).expect("vertices lie on P"))
}

fn common_watcher_with(
    n: usize,
    r: &[usize],
    c: &[usize],
    sees: impl Fn(usize, usize) -> bool,
) -> Result<Option<usize>, AuditError> {
    let k = r.len();
    let all: Vec<usize> = r.iter().chain(c).copied().collect();
    if k == 0 || c.len() != 2 * k || all.iter().any(|&v| v >= n) || !cyclically_increasing(&all) {
        return Err(AuditError::WatcherShape);
    }
    for i in 0..k {
        for cc in [c[i], c[i + k]] {
            if !sees(r[i], cc) {
                return Err(AuditError::WatcherPrecondition { r: r[i], c: cc });
            }
        }
    }
    let mut v = c[k - 1];
    loop {
        if r.iter().all(|&x| sees(x, v)) {
            return Ok(Some(v));
        }
        if v == c[k] {
            return Ok(None);
        }
        v = (v + 1) % n;
    }
}

/// Mirror image `(x, y) -> (-x, y)`; vertex `i` of the result is vertex
/// `(n - i) mod n` of the input, so the clockwise order is reversed.
fn mirrored(polygon: &Polygon) -> Polygon {
    let n = polygon.len();
    let pts: Vec<Point> = (0..n)
        .map(|i| {
            let p = polygon.vertex((n - i) % n);
            Point::new(-p.x.clone(), p.y.clone())
        })
        .collect();
    validate_polygon(pts).expect("mirror of a simple polygon")
}

/// For the bipartite split of the vertex visibility graph (vertex order
/// starting at vertex 0), every occurrence of `M_t^+` in the adjacency matrix
/// must lead, through `t` common-watcher steps, to a verified `K_{t,t}`. The
/// mirrored polygon (reverse clockwise order) is audited as well.
pub fn polygon_mt_audit(polygon: &Polygon, t: usize, opts: &AuditOptions) -> Result<AuditReport, AuditError> {
    if t == 0 {
        return Err(AuditError::InvalidT);
    }
    let n = polygon.len();
    let mut report = AuditReport::new(TheoremId::PolygonMt, n);
    let mut verifier = Verifier::new(polygon, polygon.vertices());
    report.instance.t = Some(t);
    let pattern = build_pattern(PatternKind::PolygonMt(t)).expect("t >= 1").plus_extend();
    let mut total = 0usize;
    let mut capped = false;
    let mut ktt_free = None;
    for mirror in [false, true] {
        let p = if mirror { mirrored(polygon) } else { polygon.clone() };
        let back = |v: usize| if mirror { (n - v) % n } else { v };
        let g = vertex_visibility_graph(&p);
        if ktt_free.is_none() {
            ktt_free = Some(find_complete_bipartite(&g, t, &mut Budget::new(opts.node_budget)).expect("t >= 1"));
        }
        let split = bipartite_split(&OrderedGraph::new(g.graph().clone()));
        let (left, right) = (split.left(), split.right());
        let a = adjacency_matrix(split.kept_graph().graph(), &left, &right);
        let occ = enumerate_occurrences(&a, &pattern, opts.occurrence_cap);
        total += occ.found.len();
        capped |= occ.capped;
        for o in occ.found {
            // Rows l_1..l_{t+1}, columns r_0..r_{4t-2}.
            let l: Vec<usize> = o.rows.iter().map(|&i| left[i]).collect();
            let rc: Vec<usize> = o.cols.iter().map(|&j| right[j]).collect();
            match watchers_for(g.graph(), t, &l[..t], &rc) {
                Ok(us) => {
                    let a_side: Vec<usize> = l[..t].iter().map(|&v| back(v)).collect();
                    let b_side: Vec<usize> = us.iter().map(|&v| back(v)).collect();
                    match verifier.ktt(&a_side, &b_side) {
                        Ok(()) => report.witnesses.push(Witness::Ktt(KttWitness { a: a_side, b: b_side })),
                        Err(v) => report.violations.push(v),
                    }
                }
                Err(v) => report.violations.push(map_violation(v, mirror, back)),
            }
        }
    }
    report.count("occurrences", total);
    report.count("capped", capped as i64);
    if capped {
        report.note("occurrence enumeration capped");
    }
    match ktt_free.expect("computed above") {
        KttSearch::Free if total > 0 => report.note("occurrence found although the graph is K_{t,t}-free"),
        KttSearch::Inconclusive => report.note("K_{t,t} search inconclusive"),
        _ => {}
    }
    Ok(report.finish(false))
}

/// `u_0..u_{t-1}` for one occurrence, with `l = l_1..l_t` and
/// `rc = r_0..r_{4t-2}`.
fn watchers_for(g: &Graph, t: usize, l: &[usize], rc: &[usize]) -> Result<Vec<usize>, Violation> {
    let mut us = Vec::with_capacity(t);
    for s in 0..t {
        let mut c: Vec<usize> = rc[1..t].to_vec();
        c.push(rc[t + 2 * s]);
        c.push(rc[t + 2 * s + 1]);
        c.extend_from_slice(&rc[3 * t..=4 * t - 2]);
        match common_watcher_with(g.n(), l, &c, |a, b| a == b || g.has_edge(a, b)) {
            Ok(Some(u)) => us.push(u),
            Ok(None) => return Err(Violation::NoCommonWatcher { r: l.to_vec(), c }),
            Err(AuditError::WatcherPrecondition { r, c }) => {
                return Err(Violation::OccurrenceEdgeMissing { edge: Edge::new(r, c) })
            }
            Err(e) => panic!("occurrence indices are in clockwise order: {e}"),
        }
    }
    Ok(us)
}

fn map_violation(v: Violation, mirror: bool, back: impl Fn(usize) -> usize) -> Violation {
    match v {
        Violation::NoCommonWatcher { r, c } => {
            let mut r: Vec<usize> = r.into_iter().map(&back).collect();
            let mut c: Vec<usize> = c.into_iter().map(&back).collect();
            if mirror {
                // Reverse so the lists read clockwise again.
                let all: Vec<usize> = r.iter().chain(&c).rev().copied().collect();
                let k = r.len();
                r = all[..k].to_vec();
                c = all[k..].to_vec();
            }
            Violation::NoCommonWatcher { r, c }
        }
        Violation::OccurrenceEdgeMissing { edge } => {
            Violation::OccurrenceEdgeMissing { edge: Edge::new(back(edge.lo), back(edge.hi)) }
        }
        other => other,
    }
}
