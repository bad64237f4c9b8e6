use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, ToPrimitive};

use crate::geometry::{Point, Polygon, Rational};
use crate::graph::{edges_cross, Edge};
use crate::visibility::vertex_visibility_graph;

use super::{sees, AuditReport, TheoremId, Violation, Witness};

/// Twice the area of the quadrilateral `a, c, b, d` (in that cyclic order).
fn quad_area2(pts: [&Point; 4]) -> Rational {
    let mut acc = Rational::from_integer(0.into());
    for i in 0..4 {
        let (p, q) = (pts[i], pts[(i + 1) % 4]);
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    acc.abs()
}

/// Floating-point estimate of [`quad_area2`] together with a bound on its
/// error.
fn quad_area2_approx(pts: [(f64, f64); 4]) -> (f64, f64) {
    let mut acc = 0.0;
    let mut mag = 0.0;
    for i in 0..4 {
        let (p, q) = (pts[i], pts[(i + 1) % 4]);
        let (s, t) = (p.0 * q.1, q.0 * p.1);
        acc += s - t;
        mag += s.abs() + t.abs();
    }
    (acc.abs(), mag * 64.0 * f64::EPSILON)
}

/// If the vertex visibility graph has crossing edges, the pair whose
/// endpoints span the least quadrilateral area must span a `K_4`. The
/// minimum is exact: a floating-point filter with error bounds selects the
/// candidates, which are then compared in rational arithmetic (ties broken by
/// the sorted endpoint indices).
pub fn check_k4_theorem(polygon: &Polygon) -> AuditReport {
    let g = vertex_visibility_graph(polygon);
    let n = polygon.len();
    let pts = polygon.vertices();
    let bound = 2 * n - 3;
    let mut report = AuditReport::new(TheoremId::K4, n);
    report.count("edges", g.edge_count());
    report.count("bound2n3", bound);

    let edges: Vec<Edge> = g.edges().collect();
    let approx: Vec<(f64, f64)> =
        pts.iter().map(|p| (p.x.to_f64().unwrap_or(f64::NAN), p.y.to_f64().unwrap_or(f64::NAN))).collect();
    // Quadruples a < c < b < d from crossing pairs (a, b), (c, d).
    let mut quads: Vec<([usize; 4], f64, f64)> = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if edges_cross(e, f) {
                let (ab, cd) = if e.lo < f.lo { (e, f) } else { (f, e) };
                let q = [ab.lo, cd.lo, ab.hi, cd.hi];
                let (area, err) = quad_area2_approx(q.map(|v| approx[v]));
                quads.push((q, area, err));
            }
        }
    }
    report.count("crossing_pairs", quads.len());

    if quads.is_empty() {
        if g.edge_count() > bound {
            report.violations.push(Violation::DenseWithoutCrossing { edges: g.edge_count(), bound });
        } else {
            report.note("no crossing edges required");
        }
        return report.finish(false);
    }

    let exact = |q: &[usize; 4]| quad_area2(q.map(|v| &pts[v]));
    let best = if quads.iter().all(|(_, a, e)| a.is_finite() && e.is_finite()) {
        let cutoff = quads.iter().map(|(_, a, e)| a + e).fold(f64::INFINITY, f64::min);
        let mut cands: Vec<[usize; 4]> = quads.iter().filter(|(_, a, e)| a - e <= cutoff).map(|(q, _, _)| *q).collect();
        report.count("exact_candidates", cands.len());
        cands.sort();
        min_exact(&cands, exact)
    } else {
        let mut all: Vec<[usize; 4]> = quads.iter().map(|(q, _, _)| *q).collect();
        all.sort();
        min_exact(&all, exact)
    };

    let [a, c, b, d] = best;
    let mut ok = true;
    for (x, y) in [(a, c), (c, b), (b, d), (d, a), (a, b), (c, d)] {
        if !sees(polygon, pts, x, y) {
            report.violations.push(Violation::K4SideMissing { quad: best, side: Edge::new(x, y) });
            ok = false;
            break;
        }
    }
    if ok {
        report.witnesses.push(Witness::K4(best));
    }
    report.finish(false)
}

fn min_exact(sorted: &[[usize; 4]], area: impl Fn(&[usize; 4]) -> Rational) -> [usize; 4] {
    let mut best = sorted[0];
    let mut best_area = area(&best);
    for q in &sorted[1..] {
        let a = area(q);
        if a.cmp(&best_area) == Ordering::Less {
            best = *q;
            best_area = a;
        }
    }
    best
}
