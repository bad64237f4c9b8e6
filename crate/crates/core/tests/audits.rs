use polyvis_core::audits::{
    audit_double_cherry, capoyleas_pach_audit, capoyleas_pach_bound, check_k4_theorem, find_common_watcher,
    monotone_theorem_audit, polygon_mt_audit, report_row, star_theorem_audit, AuditError, AuditOptions, Verdict,
    Violation, Witness,
};
use polyvis_core::generators::{generate, Family};
use polyvis_core::geometry::{segment_avoids_exterior, validate_polygon, GeometryError, Point, Polygon};
use polyvis_core::graph::Edge;
use polyvis_core::ordered::{exists_crossing_sequence, CrossingRule};
use polyvis_core::visibility::vertex_visibility_graph;

fn poly(pts: &[(i64, i64)]) -> Polygon {
    validate_polygon(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
}

fn sees(p: &Polygon, i: usize, j: usize) -> bool {
    segment_avoids_exterior(p, p.vertex(i), p.vertex(j)).unwrap()
}

fn instances(max_n: usize, seeds: u64) -> Vec<(Family, usize, u64, Polygon)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in (f.min_vertices()..=max_n).step_by(3) {
            let seeds = if f.is_seeded() { seeds } else { 1 };
            for seed in 0..seeds {
                out.push((f, n, seed, generate(f, n, seed).unwrap()));
            }
        }
    }
    out
}

#[test]
fn k4_witnesses_reverify() {
    let mut dense = 0;
    for seed in 0..40 {
        for n in [8, 14, 20] {
            let p = generate(Family::Random, n, seed).unwrap();
            let r = check_k4_theorem(&p);
            assert_eq!(r.verdict, Verdict::Pass, "{seed} {n}");
            if vertex_visibility_graph(&p).edge_count() > 2 * n - 3 {
                dense += 1;
                let Some(Witness::K4(q)) = r.witnesses.first() else { panic!("no K4 witness") };
                for i in 0..4 {
                    for j in i + 1..4 {
                        assert!(sees(&p, q[i], q[j]));
                    }
                }
            }
        }
    }
    assert!(dense > 0);
}

#[test]
fn double_cherry_and_capoyleas_pach_on_families() {
    for (f, n, seed, p) in instances(20, 4) {
        let r = audit_double_cherry(&p, None).unwrap();
        assert!(r.violations.is_empty(), "{f} {n} {seed}: {:?}", r.violations);
        let g = vertex_visibility_graph(&p);
        let cp = capoyleas_pach_audit(&g);
        assert!(cp.passed(), "{f} {n} {seed}");
        if let Some(b) = capoyleas_pach_bound(n, cp.counter("maxcross").unwrap() as usize) {
            assert!(g.edge_count() <= b);
        }
    }
}

#[test]
fn star_and_monotone_audits() {
    let opts = AuditOptions::default();
    for seed in 0..10 {
        for n in [6, 11, 16] {
            let s = generate(Family::Star, n, seed).unwrap();
            let r = star_theorem_audit(&s, None, 2, &opts).unwrap();
            assert!(r.passed(), "star {n} {seed}: {:?}", r.violations);
            let m = generate(Family::XMonotone, n, seed).unwrap();
            let r = monotone_theorem_audit(&m, None, 1, &opts).unwrap();
            assert!(r.passed(), "monotone {n} {seed}: {:?}", r.violations);
            for w in &r.witnesses {
                let Witness::Ktt(k) = w else { continue };
                assert!(k.a.iter().all(|&x| k.b.iter().all(|&y| sees(&m, x, y))));
            }
        }
    }
}

#[test]
fn audit_preconditions() {
    let opts = AuditOptions::default();
    // A comb is neither star-shaped nor x-monotone.
    let comb = poly(&[(0, 0), (0, 3), (1, 3), (1, 1), (2, 1), (2, 3), (3, 3), (3, 1), (4, 1), (4, 3), (5, 3), (5, 0)]);
    assert!(matches!(star_theorem_audit(&comb, None, 1, &opts), Err(AuditError::NotStarShaped)));
    let c_shape = poly(&[(0, 0), (1, 10), (10, 11), (9, 8), (3, 7), (4, 3), (11, 2), (12, -1)]);
    assert!(matches!(monotone_theorem_audit(&c_shape, None, 1, &opts), Err(AuditError::NotMonotone)));
    // Chains are only defined for distinct x-coordinates.
    assert!(matches!(
        monotone_theorem_audit(&comb, None, 1, &opts),
        Err(AuditError::Geometry(GeometryError::DuplicateXCoordinate { .. }))
    ));
    assert!(matches!(polygon_mt_audit(&comb, 0, &opts), Err(AuditError::InvalidT)));
}

#[test]
fn polygon_mt_witnesses_reverify() {
    let opts = AuditOptions { occurrence_cap: 50, ..AuditOptions::default() };
    let mut witnesses = 0;
    for seed in 0..6 {
        for f in [Family::Random, Family::Convex] {
            let p = generate(f, 16, seed).unwrap();
            let r = polygon_mt_audit(&p, 2, &opts).unwrap();
            assert!(r.passed(), "{f} {seed}: {:?}", r.violations);
            for w in &r.witnesses {
                let Witness::Ktt(k) = w else { continue };
                assert!(k.a.iter().all(|&x| k.b.iter().all(|&y| sees(&p, x, y))));
                witnesses += 1;
            }
        }
    }
    assert!(witnesses > 0);
}

#[test]
fn watcher_on_convex_polygon() {
    let hex = generate(Family::Convex, 6, 0).unwrap();
    let w = find_common_watcher(&hex, &[0, 1], &[2, 3, 4, 5]).unwrap();
    assert!(w.is_some_and(|v| (3..=4).contains(&v)));
}

#[test]
fn violations_confirm_only_when_genuine() {
    let l = poly(&[(0, 0), (0, 4), (2, 4), (2, 2), (4, 2), (4, 0)]);
    let pts = l.vertices();
    let blocked = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).find(|&(i, j)| !sees(&l, i, j)).unwrap();
    let blocked = Edge::new(blocked.0, blocked.1);
    assert!(Violation::OccurrenceEdgeMissing { edge: blocked }.confirm(&l, pts));
    assert!(!Violation::OccurrenceEdgeMissing { edge: Edge::new(0, 1) }.confirm(&l, pts));
    assert!(Violation::NonAdjacentDoubleCherry { u: blocked.lo, v: blocked.hi }.confirm(&l, pts));
    assert!(!Violation::KttNotVerified { a: vec![0], b: vec![1], missing: Edge::new(0, 1) }.confirm(&l, pts));
    assert!(!Violation::CapoyleasPach { k: 1, edges: 3, bound: 5 }.confirm(&l, pts));
}

#[test]
fn report_rows_pass() {
    let opts = AuditOptions::default();
    for f in Family::ALL {
        let row = report_row(f, 14, 3, 2, &opts).unwrap();
        assert!(row.audits_pass(), "{f}");
        assert_eq!(row.n, 14);
        if f == Family::Fan {
            assert_eq!(row.edges, 2 * 14 - 3);
            assert!(!row.k4);
        }
        if f == Family::Convex {
            assert_eq!(row.edges, 14 * 13 / 2);
        }
    }
}

#[test]
fn backward_chains_do_not_force_visibility() {
    // Vertices 0 and 3 are linked both ways by chains of crossing edges, but
    // one of those chains steps backwards and the pair is blocked by the notch.
    let p = generate(Family::Star, 6, 2).unwrap();
    let g = vertex_visibility_graph(&p);
    assert!(!g.has_edge(0, 3));
    for (u, v) in [(0, 3), (3, 0)] {
        assert!(exists_crossing_sequence(&g, u, v, CrossingRule::AnyCrossing).unwrap());
    }
    assert!(!exists_crossing_sequence(&g, 3, 0, CrossingRule::Forward).unwrap());
    assert!(Violation::NonAdjacentCrossingSequences { u: 0, v: 3 }.confirm(&p, p.vertices()));
    let r = audit_double_cherry(&p, None).unwrap();
    assert!(r.passed());
    assert!(r.counter("unordered_chain_pairs").unwrap() >= 1);
}
